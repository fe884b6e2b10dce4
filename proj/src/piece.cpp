#include "gabordual/piece.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gabordual/error.hpp"

namespace gabordual {

namespace {

double poly_deriv(const Piece::Poly& p, int m, double x) {
  const auto& c = p.coeffs;
  const int deg = static_cast<int>(c.size()) - 1;
  if (m > deg) return 0.0;
  const double t = x - p.origin;
  // Horner on the m-th derivative coefficients c_k * k!/(k-m)!.
  double acc = 0.0;
  for (int k = deg; k >= m; --k) {
    double falling = 1.0;
    for (int j = 0; j < m; ++j) falling *= static_cast<double>(k - j);
    acc = acc * t + c[static_cast<std::size_t>(k)] * falling;
  }
  return acc;
}

double trig_deriv(const Piece::Trig& p, int m, double x) {
  double acc = (m == 0) ? p.a0 : 0.0;
  const std::size_t terms = std::max(p.cos_coeffs.size(), p.sin_coeffs.size());
  for (std::size_t i = 0; i < terms; ++i) {
    const double a = i < p.cos_coeffs.size() ? p.cos_coeffs[i] : 0.0;
    const double b = i < p.sin_coeffs.size() ? p.sin_coeffs[i] : 0.0;
    if (a == 0.0 && b == 0.0) continue;
    const double w = static_cast<double>(i + 1) * std::numbers::pi;
    const double c = std::cos(w * x);
    const double s = std::sin(w * x);
    const double scale = std::pow(w, m);
    // d^m/dx^m of a cos + b sin cycles with period 4 in m.
    double v = 0.0;
    switch (m % 4) {
      case 0: v = a * c + b * s; break;
      case 1: v = -a * s + b * c; break;
      case 2: v = -a * c - b * s; break;
      default: v = a * s - b * c; break;
    }
    acc += scale * v;
  }
  return acc;
}

}  // namespace

Piece Piece::polynomial(std::vector<double> coeffs, double origin) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return Piece(Poly{origin, std::move(coeffs)});
}

Piece Piece::trig(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
  return Piece(Trig{a0, std::move(cos_coeffs), std::move(sin_coeffs)});
}

Piece Piece::custom(DerivativeFn fn, int max_order) {
  if (!fn) throw ParameterError("custom piece requires an evaluator");
  if (max_order < 0) throw ParameterError("custom piece max_order must be non-negative");
  return Piece(Custom{std::move(fn), max_order});
}

double Piece::deriv(int m, double x, Side side) const {
  if (m < 0) throw UnsupportedOrderError("negative derivative order");
  if (m > max_order()) {
    std::ostringstream msg;
    msg << "derivative order " << m << " exceeds evaluator limit " << max_order();
    throw UnsupportedOrderError(msg.str());
  }
  return std::visit(
      [&](const auto& rep) -> double {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Poly>) {
          return poly_deriv(rep, m, x);
        } else if constexpr (std::is_same_v<T, Trig>) {
          return trig_deriv(rep, m, x);
        } else {
          return rep.fn(m, x, side);
        }
      },
      rep_);
}

int Piece::max_order() const {
  if (const auto* c = std::get_if<Custom>(&rep_)) return c->max_order;
  return kUnboundedOrder;
}

Piece Piece::affine(double factor, double offset) const {
  return std::visit(
      [&](const auto& rep) -> Piece {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Poly>) {
          Poly out = rep;
          for (double& c : out.coeffs) c *= factor;
          out.coeffs[0] += offset;
          return Piece(std::move(out));
        } else if constexpr (std::is_same_v<T, Trig>) {
          Trig out = rep;
          out.a0 = out.a0 * factor + offset;
          for (double& c : out.cos_coeffs) c *= factor;
          for (double& c : out.sin_coeffs) c *= factor;
          return Piece(std::move(out));
        } else {
          auto inner = rep.fn;
          return Piece(Custom{[inner, factor, offset](int m, double x, Side s) {
                                return factor * inner(m, x, s) + (m == 0 ? offset : 0.0);
                              },
                              rep.max_order});
        }
      },
      rep_);
}

Piecewise::Piecewise(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw ParameterError("piecewise function needs at least one segment");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!(s.lo < s.hi)) throw ParameterError("segment with non-positive length");
    if (i > 0 && segments_[i - 1].hi != s.lo)
      throw ParameterError("segments must be contiguous (shared endpoints, no gaps or overlaps)");
  }
}

std::optional<std::size_t> Piecewise::locate(double x, Side side) const {
  if (segments_.empty()) return std::nullopt;
  // Segments are few; upper_bound on the left endpoints keeps it O(log n) anyway.
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double v, const Segment& s) { return v < s.lo; });
  if (side == Side::Right) {
    if (it == segments_.begin()) return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(std::distance(segments_.begin(), it)) - 1;
    if (x < segments_[i].hi) return i;
    return std::nullopt;
  }
  // Left: lo < x <= hi.
  if (it == segments_.begin()) return std::nullopt;
  std::size_t i = static_cast<std::size_t>(std::distance(segments_.begin(), it)) - 1;
  if (x == segments_[i].lo) {
    if (i == 0) return std::nullopt;
    --i;
  }
  if (x <= segments_[i].hi) return i;
  return std::nullopt;
}

std::vector<double> Piecewise::knots() const {
  std::vector<double> out;
  if (segments_.empty()) return out;
  out.push_back(segments_.front().lo);
  for (const auto& s : segments_) out.push_back(s.hi);
  return out;
}

int Piecewise::max_order() const {
  int order = kUnboundedOrder;
  for (const auto& s : segments_) order = std::min(order, s.piece.max_order());
  return order;
}

std::vector<double> poly_multiply(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace gabordual
