#include "gabordual/dual_window.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"

namespace gabordual {

namespace {

constexpr double kSeamSnap = 1e-13;
constexpr double kIntegerSnap = 1e-12;

void require_b(double b) {
  if (!(b > 0.0 && b < 1.0)) throw ParameterError("b must lie in (0,1), got " + format_real(b));
}

std::vector<Interval> merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& c) { return a.lo < c.lo; });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

// prod_{j=1..k} g(u - 1 - j d) / g(u - j d), with sign flipped for the eta side.
double side_product(const PiecewiseWindow& g, int k, double u, double d, double dir) {
  double p = 1.0;
  for (int j = 1; j <= k; ++j) p *= g(u - dir * (1.0 + j * d)) / g(u - dir * j * d);
  return p;
}

}  // namespace

int kmax(double b) {
  require_b(b);
  const double r = b / (1.0 - b);
  const double nearest = std::round(r);
  if (std::abs(r - nearest) <= kIntegerSnap * std::max(1.0, r)) return static_cast<int>(nearest) - 1;
  return static_cast<int>(std::ceil(r)) - 1;
}

std::vector<Interval> support_set(double b) {
  const int km = kmax(b);
  std::vector<Interval> v{{-1.0, 1.0}};
  for (int k = 1; k <= km; ++k) {
    v.push_back({-k - 1.0, -k / b});
    v.push_back({k / b, k + 1.0});
  }
  return merge(std::move(v));
}

std::vector<double> seam_points(double b) {
  const int km = kmax(b);
  std::vector<double> s;
  for (int k = 0; k <= km; ++k) {
    s.push_back(k / b);
    s.push_back(-k / b);
    s.push_back(k + 1.0);
    s.push_back(-k - 1.0);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

double gamma_k(const Periodization& psi, const ZFunction& z, double b, int k, double x) {
  if (k < 0) throw ParameterError("gamma_k: k must be non-negative");
  if (x < k / b || x > k + 1.0) return 0.0;
  const auto& g = psi.window();
  const double u = x - k;
  const double d = 1.0 / b - 1.0;
  const double bracket = g(u - 1.0) * z(u) + b * psi(u);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * side_product(g, k, u, d, 1.0) * bracket;
}

double eta_k(const Periodization& psi, const ZFunction& z, double b, int k, double x) {
  if (k < 0) throw ParameterError("eta_k: k must be non-negative");
  if (x < -k - 1.0 || x > -k / b) return 0.0;
  const auto& g = psi.window();
  const double u = x + k;
  const double d = 1.0 / b - 1.0;
  const double bracket = -g(u + 1.0) * z(u + 1.0) + b * psi(u + 1.0);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * side_product(g, k, u, d, -1.0) * bracket;
}

struct DualWindow::State {
  double b = 0.0;
  int kmax = 0;
  std::vector<PieceInfo> pieces;
  std::vector<double> seams;
  std::optional<double> center;
  std::optional<Periodization> psi;
  std::optional<ZFunction> z;
  std::function<double(double)> fn;
};

DualWindow DualWindow::from_function(double b, std::vector<Interval> support, std::function<double(double)> fn,
                                     std::vector<double> seams) {
  require_b(b);
  auto s = std::make_shared<State>();
  s->b = b;
  s->kmax = gabordual::kmax(b);
  support = merge(std::move(support));
  for (const auto& iv : support) {
    if (iv.lo > iv.hi) throw ParameterError("support interval with lo > hi");
    s->pieces.push_back({iv, PieceKind::Closure, 0});
    s->seams.push_back(iv.lo);
    s->seams.push_back(iv.hi);
  }
  if (!seams.empty()) s->seams = std::move(seams);
  std::sort(s->seams.begin(), s->seams.end());
  s->seams.erase(std::unique(s->seams.begin(), s->seams.end()), s->seams.end());
  s->fn = std::move(fn);
  return DualWindow(std::move(s));
}

DualWindow build_dual(const PiecewiseWindow& g, const ZFunction& z, double b) {
  require_b(b);
  auto s = std::make_shared<DualWindow::State>();
  s->b = b;
  s->kmax = kmax(b);
  s->psi.emplace(g);
  s->z.emplace(z);
  for (int k = s->kmax; k >= 0; --k) s->pieces.push_back({{-k - 1.0, -k / b}, DualWindow::PieceKind::Eta, k});
  for (int k = 0; k <= s->kmax; ++k) s->pieces.push_back({{k / b, k + 1.0}, DualWindow::PieceKind::Gamma, k});
  s->seams = seam_points(b);
  s->center = b * (*s->psi)(0.0);
  return DualWindow(std::move(s));
}

double DualWindow::snap(double x) const {
  const auto& seams = s_->seams;
  auto it = std::lower_bound(seams.begin(), seams.end(), x);
  if (it != seams.end() && *it - x <= kSeamSnap) return *it;
  if (it != seams.begin() && x - *std::prev(it) <= kSeamSnap) return *std::prev(it);
  return x;
}

double DualWindow::eval_piece(const PieceInfo& p, double x) const {
  switch (p.kind) {
    case PieceKind::Eta:
      return eta_k(*s_->psi, *s_->z, s_->b, p.k, x);
    case PieceKind::Gamma:
      return gamma_k(*s_->psi, *s_->z, s_->b, p.k, x);
    case PieceKind::Closure:
      return s_->fn(x);
  }
  return 0.0;
}

double DualWindow::operator()(double x) const {
  x = snap(x);
  if (s_->center && x == 0.0) return *s_->center;
  for (const auto& p : s_->pieces) {
    if (p.span.lo <= x && x <= p.span.hi) return eval_piece(p, x);
  }
  return 0.0;
}

double DualWindow::eval_sided(double x, Side side) const {
  x = snap(x);
  for (const auto& p : s_->pieces) {
    const bool inside = side == Side::Right ? (p.span.lo <= x && x < p.span.hi) : (p.span.lo < x && x <= p.span.hi);
    if (inside) return eval_piece(p, x);
  }
  return 0.0;
}

double DualWindow::b() const { return s_->b; }
int DualWindow::kmax() const { return s_->kmax; }
const std::vector<double>& DualWindow::seams() const { return s_->seams; }
const std::vector<DualWindow::PieceInfo>& DualWindow::pieces() const { return s_->pieces; }
std::optional<double> DualWindow::center_value() const { return s_->center; }
bool DualWindow::is_constructed() const { return s_->z.has_value(); }
const Periodization* DualWindow::periodization() const { return s_->psi ? &*s_->psi : nullptr; }
const ZFunction* DualWindow::z() const { return s_->z ? &*s_->z : nullptr; }

std::vector<Interval> DualWindow::support() const {
  std::vector<Interval> v;
  for (const auto& p : s_->pieces) v.push_back(p.span);
  return merge(std::move(v));
}

DualWindow canonical_painless_dual(const PiecewiseWindow& g, double b) {
  require_b(b);
  if (b > 0.5)
    throw ParameterError("b = " + format_real(b) + " is outside the painless region b <= 1/2");
  auto fn = [g, b](double x) {
    const double s = g(x) * g(x) + g(x - 1.0) * g(x - 1.0) + g(x + 1.0) * g(x + 1.0);
    if (s < kDegenerateDenominator) throw DegenerateWindowError("sum of squared shifts vanishes");
    return b * g(x) / s;
  };
  return DualWindow::from_function(b, {{-1.0, 1.0}}, fn, {-1.0, 1.0});
}

void write_samples_tsv(std::ostream& out, const std::function<double(double)>& f, double lo, double hi,
                       int count, bool header, const char* value_name) {
  if (count < 2) throw ParameterError("sample count must be at least 2");
  if (header) out << "x\t" << value_name << '\n';
  for (int i = 0; i < count; ++i) {
    const double x = i == count - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    out << format_real(x) << '\t' << format_real(f(x)) << '\n';
  }
}

}  // namespace gabordual
