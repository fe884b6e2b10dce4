#include "gabordual/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"

namespace gabordual {

namespace {

constexpr int kMaxProbeOrder = 6;
constexpr double kMaxStep = 8e-3;
constexpr double kMinStep = 1e-5;
constexpr double kKnotMatch = 1e-12;

double fd_estimate(const std::function<double(double)>& f, double fp, double p, int m, Side side, double step,
                   const std::vector<double>& w) {
  const double dir = side == Side::Right ? 1.0 : -1.0;
  double s = w[0] * fp;
  for (std::size_t i = 1; i < w.size(); ++i) s += w[i] * f(p + dir * static_cast<double>(i) * step);
  return s / std::pow(step, m);
}

// Largest FD step allowed so the stencil stays clear of the next seam.
double max_probe_step(const std::vector<double>& seams, double p, int m, Side side) {
  double gap = std::numeric_limits<double>::infinity();
  for (double s : seams) {
    const double d = side == Side::Right ? s - p : p - s;
    if (d > 1e-12) gap = std::min(gap, d);
  }
  return std::min(kMaxStep, 0.45 * gap / (m + 3));
}

bool inside_any(const std::vector<Interval>& v, double x) {
  return std::any_of(v.begin(), v.end(), [x](const Interval& iv) { return iv.lo <= x && x <= iv.hi; });
}

}  // namespace

std::vector<double> fd_weights(double z, const std::vector<double>& nodes, int m) {
  const std::size_t n = nodes.size();
  if (n == 0 || m < 0 || static_cast<std::size_t>(m) >= n)
    throw ParameterError("fd_weights: need more nodes than the derivative order");
  const std::size_t mm = static_cast<std::size_t>(m);
  std::vector<std::vector<double>> c(n, std::vector<double>(mm + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, mm);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][mm];
  return w;
}

double one_sided_derivative(const std::function<double(double)>& f, double fp, double p, int m, Side side,
                            double step) {
  if (m == 0) return fp;
  const double dir = side == Side::Right ? 1.0 : -1.0;
  std::vector<double> nodes(static_cast<std::size_t>(m) + 4);
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = dir * static_cast<double>(i);
  const auto w = fd_weights(0.0, nodes, m);
  const double coarse = fd_estimate(f, fp, p, m, side, step, w);
  const double fine = fd_estimate(f, fp, p, m, side, step / 2.0, w);
  return (16.0 * fine - coarse) / 15.0;
}

double adaptive_one_sided_derivative(const std::function<double(double)>& f, double fp, double p, int m, Side side,
                                     double max_step, double min_step) {
  if (m == 0) return fp;
  std::vector<double> est;
  for (double step = max_step; step >= min_step || est.size() < 2; step /= 2.0)
    est.push_back(one_sided_derivative(f, fp, p, m, side, step));
  std::size_t best = 1;
  for (std::size_t j = 2; j < est.size(); ++j)
    if (std::abs(est[j] - est[j - 1]) < std::abs(est[best] - est[best - 1])) best = j;
  return est[best];
}

double duality_residual(const PiecewiseWindow& g, const DualWindow& h, double b, int k, int grid) {
  if (grid < 2) throw ParameterError("duality grid needs at least 2 points");
  const int reach = h.kmax() + 2;
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    double s = 0.0;
    for (int n = -reach; n <= reach; ++n) s += g(x + k / b + n) * h(x + n);
    worst = std::max(worst, std::abs(s - (k == 0 ? b : 0.0)));
  }
  return worst;
}

double SeamJump::jump() const { return std::abs(right - left); }

std::vector<SeamJump> seam_jump_probe(const DualWindow& h, int n, const std::vector<double>& points) {
  if (n < 0 || n > kMaxProbeOrder)
    throw ParameterError("seam probe order must lie in 0..6, got " + std::to_string(n));
  const std::function<double(double)> f = [&h](double x) { return h(x); };
  std::vector<SeamJump> out;
  for (double p : points) {
    const double vl = h.eval_sided(p, Side::Left);
    const double vr = h.eval_sided(p, Side::Right);
    for (int m = 0; m <= n; ++m) {
      const double l = adaptive_one_sided_derivative(f, vl, p, m, Side::Left,
                                                     max_probe_step(h.seams(), p, m, Side::Left), kMinStep);
      const double r = adaptive_one_sided_derivative(f, vr, p, m, Side::Right,
                                                     max_probe_step(h.seams(), p, m, Side::Right), kMinStep);
      out.push_back({p, m, l, r});
    }
  }
  return out;
}

std::vector<std::pair<double, double>> derivative_jumps(const PiecewiseWindow& g, int order, double tol) {
  std::vector<std::pair<double, double>> out;
  for (double x : g.knots()) {
    const double l = g.eval_deriv_sided(order, x, Side::Left);
    const double r = g.eval_deriv_sided(order, x, Side::Right);
    if (std::abs(r - l) > tol * std::max({1.0, std::abs(l), std::abs(r)})) out.emplace_back(x, r - l);
  }
  return out;
}

double obstruction_jump_sum(const PiecewiseWindow& g, const DualWindow& h, int n, double x_r) {
  const auto jumps = derivative_jumps(g, n + 1);
  const bool known = std::any_of(jumps.begin(), jumps.end(),
                                 [x_r](const auto& j) { return std::abs(j.first - x_r) <= kKnotMatch; });
  if (!known)
    throw ParameterError("x_r = " + format_real(x_r) + " is not a knot where g^(" + std::to_string(n + 1) +
                         ") jumps");
  double s = 0.0;
  for (const auto& [xs, jump] : jumps) {
    const double d = xs - x_r;
    if (std::abs(d - std::round(d)) <= kKnotMatch) s += jump * h(xs);
  }
  return s;
}

FrameBounds frame_bounds_painless(const PiecewiseWindow& g, double b, int grid) {
  if (!(b > 0.0)) throw ParameterError("b must be positive");
  if (b > 0.5) throw ParameterError("b = " + format_real(b) + " is outside the painless region b <= 1/2");
  if (grid < 2) throw ParameterError("frame-bound grid needs at least 2 points");
  FrameBounds fb{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    const double v = (g(x) * g(x) + g(x - 1.0) * g(x - 1.0) + g(x + 1.0) * g(x + 1.0)) / b;
    fb.lower = std::min(fb.lower, v);
    fb.upper = std::max(fb.upper, v);
  }
  return fb;
}

bool is_antisymmetric(const ZFunction& z, int grid, double tol) {
  for (int i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    const double a = z(x);
    if (std::abs(a + z(1.0 - x)) > tol * std::max(1.0, std::abs(a))) return false;
  }
  return true;
}

double max_abs_outside(const DualWindow& h, const std::vector<Interval>& allowed, double lo, double hi, int grid) {
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / grid;
    if (!inside_any(allowed, x)) worst = std::max(worst, std::abs(h(x)));
  }
  return worst;
}

double VerificationReport::max_duality_residual() const {
  double m = 0.0;
  for (const auto& [k, r] : duality_residuals) m = std::max(m, r);
  return m;
}

double VerificationReport::max_seam_jump() const {
  double m = 0.0;
  for (const auto& s : seam_jumps) m = std::max(m, s.jump());
  return m;
}

bool VerificationReport::duality_pass() const { return max_duality_residual() < opts.duality_tol; }
bool VerificationReport::seam_pass() const { return max_seam_jump() < opts.seam_tol; }
bool VerificationReport::support_pass() const { return support_leak < opts.support_tol; }
bool VerificationReport::symmetry_pass() const { return !symmetry_expected || symmetry_defect < opts.symmetry_tol; }
bool VerificationReport::bounded_pass() const { return std::isfinite(sup_abs); }
bool VerificationReport::pass() const {
  return duality_pass() && seam_pass() && support_pass() && symmetry_pass() && bounded_pass();
}

std::string VerificationReport::to_text() const {
  std::ostringstream o;
  auto flag = [](bool v) { return v ? "true" : "false"; };
  o << "params.b = " << format_real(b) << '\n';
  o << "params.kmax = " << kmax << '\n';
  o << "params.n = " << n << '\n';
  for (const auto& [k, r] : duality_residuals) o << "duality.k" << k << " = " << format_real(r) << '\n';
  o << "duality.max = " << format_real(max_duality_residual()) << '\n';
  o << "duality.tol = " << format_real(opts.duality_tol) << '\n';
  o << "duality.pass = " << flag(duality_pass()) << '\n';
  for (const auto& s : seam_jumps) {
    o << "seam.x" << format_real(s.point) << ".m" << s.order << " = " << format_real(s.jump()) << '\n';
  }
  o << "seam.max = " << format_real(max_seam_jump()) << '\n';
  o << "seam.tol = " << format_real(opts.seam_tol) << '\n';
  o << "seam.pass = " << flag(seam_pass()) << '\n';
  o << "support.leak = " << format_real(support_leak) << '\n';
  o << "support.tol = " << format_real(opts.support_tol) << '\n';
  o << "support.pass = " << flag(support_pass()) << '\n';
  o << "symmetry.expected = " << flag(symmetry_expected) << '\n';
  o << "symmetry.defect = " << format_real(symmetry_defect) << '\n';
  o << "symmetry.tol = " << format_real(opts.symmetry_tol) << '\n';
  o << "symmetry.pass = " << flag(symmetry_pass()) << '\n';
  o << "bounded.sup_abs = " << format_real(sup_abs) << '\n';
  o << "bounded.pass = " << flag(bounded_pass()) << '\n';
  o << "overall.pass = " << flag(pass()) << '\n';
  return o.str();
}

VerificationReport verify_dual(const PiecewiseWindow& g, const DualWindow& h, int n, bool expect_symmetric,
                               const ReportOptions& opts) {
  VerificationReport r;
  r.b = h.b();
  r.kmax = h.kmax();
  r.n = n;
  r.opts = opts;
  const int reach = r.kmax + 2;
  for (int k = -reach; k <= reach; ++k) r.duality_residuals[k] = duality_residual(g, h, r.b, k, opts.duality_grid);
  r.seam_jumps = seam_jump_probe(h, n, h.seams());
  r.support_leak = max_abs_outside(h, support_set(r.b), -reach, reach, opts.support_grid);

  r.symmetry_expected = expect_symmetric;
  const double span = r.kmax + 1.0;
  for (int i = 0; i < opts.symmetry_grid; ++i) {
    const double x = span * (i + 0.5) / opts.symmetry_grid;
    r.symmetry_defect = std::max(r.symmetry_defect, std::abs(h(x) - h(-x)));
  }
  for (int i = 0; i <= opts.support_grid; ++i) {
    const double x = -span + 2.0 * span * i / opts.support_grid;
    r.sup_abs = std::max(r.sup_abs, std::abs(h(x)));
  }
  return r;
}

VerificationReport full_report(const PiecewiseWindow& g, const ZFunction& z, double b, int n,
                               const ReportOptions& opts) {
  const auto h = build_dual(g, z, b);
  return verify_dual(g, h, n, is_even(g) && is_antisymmetric(z), opts);
}

}  // namespace gabordual
