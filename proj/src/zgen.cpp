#include "gabordual/zgen.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <numbers>

#include "gabordual/error.hpp"
#include "gabordual/hermite.hpp"
#include "gabordual/text_format.hpp"

namespace gabordual {

namespace {

constexpr double kFlatTol = 1e-10;
constexpr double kTrigCondLimit = 1e12;
constexpr double kJunctionTol = 1e-8;

void require_b(double b) {
  if (!(b > 0.0 && b < 1.0)) throw ParameterError("b must lie in (0,1), got " + format_real(b));
}

void require_order(const PiecewiseWindow& g, int n) {
  if (n < 0) throw ParameterError("order must be non-negative");
  if (n > g.max_order())
    throw UnsupportedOrderError("order " + std::to_string(n) + " exceeds window max_order " +
                                std::to_string(g.max_order()));
}

double binom(int m, int l) {
  double r = 1.0;
  for (int i = 1; i <= l; ++i) r = r * (m - l + i) / i;
  return r;
}

// Sum of C(m,l) (g^(l)(0)/g(0)) t[m-l], l = 1..m.
double recursion_sum(const std::vector<double>& gd, const std::vector<double>& t, int m) {
  double s = 0.0;
  for (int l = 1; l <= m; ++l) s += binom(m, l) * (gd[static_cast<std::size_t>(l)] / gd[0]) * t[static_cast<std::size_t>(m - l)];
  return s;
}

Piece outer_piece(std::shared_ptr<const Periodization> psi, double b, bool left_piece) {
  const int order = psi->window().max_order();
  return Piece::custom(
      [psi, b, left_piece](int m, double x, Side side) {
        return outer_piece_derivatives(*psi, b, left_piece, m, x, side)[static_cast<std::size_t>(m)];
      },
      order);
}

struct Junctions {
  double xl;
  double xr;
};

Junctions small_support_junctions(double b, int N) {
  require_b(b);
  if (N < 1) throw ParameterError("N must be a positive integer");
  const double lower = N / (N + 1.0);
  const double upper = 2.0 * N / (2.0 * N + 1.0);
  if (b < lower || b >= upper)
    throw ParameterError("b = " + format_real(b) + " outside [N/(N+1), 2N/(2N+1)) = [" + format_real(lower) + ", " +
                         format_real(upper) + ") for N = " + std::to_string(N));
  const double d = 1.0 / b - 1.0;
  return {std::max(0.0, 1.0 - N * d), std::min(1.0, N * d)};
}

ZFunction assemble_small_support(std::shared_ptr<const Periodization> psi, double b, Junctions j, Piece mid,
                                 std::string description) {
  std::vector<Segment> segs;
  if (j.xl > 0.0) segs.push_back({0.0, j.xl, outer_piece(psi, b, true)});
  segs.push_back({j.xl, j.xr, std::move(mid)});
  if (j.xr < 1.0) segs.push_back({j.xr, 1.0, outer_piece(psi, b, false)});
  return ZFunction(Piecewise(std::move(segs)), std::move(description));
}

// c_0 cos(pi x) + c_1 cos(3 pi x) + ... matching derivatives 0..n at x0;
// returns nullopt when the collocation matrix is numerically singular.
std::optional<Piece> antisymmetric_trig(double x0, const std::vector<double>& d0) {
  const int n = static_cast<int>(d0.size()) - 1;
  Eigen::MatrixXd a(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  for (int m = 0; m <= n; ++m) {
    rhs(m) = d0[static_cast<std::size_t>(m)];
    for (int j = 0; j <= n; ++j) {
      const double w = (2 * j + 1) * std::numbers::pi;
      a(m, j) = std::pow(w, m) * std::cos(w * x0 + m * std::numbers::pi / 2.0);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) == 0.0 || sv(0) / sv(sv.size() - 1) > kTrigCondLimit) return std::nullopt;
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(rhs);
  std::vector<double> cos_coeffs(static_cast<std::size_t>(2 * n + 1), 0.0);
  for (int j = 0; j <= n; ++j) cos_coeffs[static_cast<std::size_t>(2 * j)] = c(j);
  return Piece::trig(0.0, std::move(cos_coeffs));
}

}  // namespace

std::vector<double> outer_piece_derivatives(const Periodization& psi, double b, bool left_piece, int n, double x,
                                            Side side) {
  const auto& g = psi.window();
  const double sign = left_piece ? 1.0 : -1.0;
  const double shift = left_piece ? 0.0 : 1.0;
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    u[static_cast<std::size_t>(j)] = sign * b * psi.deriv_sided(j, x, side);
    v[static_cast<std::size_t>(j)] = g.eval_deriv_sided(j, x - shift, side);
  }
  if (std::abs(v[0]) < kDegenerateDenominator)
    throw DegenerateWindowError("outer piece denominator vanishes at x=" + format_real(x));
  std::vector<double> q(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    double s = u[static_cast<std::size_t>(m)];
    for (int l = 1; l <= m; ++l) s -= binom(m, l) * v[static_cast<std::size_t>(l)] * q[static_cast<std::size_t>(m - l)];
    q[static_cast<std::size_t>(m)] = s / v[0];
  }
  return q;
}

BoundaryTargets boundary_targets(const PiecewiseWindow& g, double b, int n) {
  require_b(b);
  require_order(g, n);
  const Periodization psi(g);
  std::vector<double> gd(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) gd[static_cast<std::size_t>(j)] = g.eval_deriv(j, 0.0);
  const double g0 = gd[0];
  BoundaryTargets t{n, b, std::vector<double>(static_cast<std::size_t>(n) + 1),
                    std::vector<double>(static_cast<std::size_t>(n) + 1)};
  t.at0[0] = b / (g0 * g0);
  t.at1[0] = -b / (g0 * g0);
  for (int m = 1; m <= n; ++m) {
    const double forcing = b * psi.deriv_at_zero(m) / g0;
    t.at0[static_cast<std::size_t>(m)] = -recursion_sum(gd, t.at0, m) + forcing;
    t.at1[static_cast<std::size_t>(m)] = -recursion_sum(gd, t.at1, m) - forcing;
  }
  return t;
}

ZFunction z_standard(const PiecewiseWindow& g, double b) {
  require_b(b);
  const int n = std::min(g.declared_smoothness().value_or(g.max_order()), g.max_order());
  const double g0 = g(0.0);
  if (std::abs(g0) < kDegenerateDenominator) throw DegenerateWindowError("g(0) = 0: window is degenerate");
  for (int m = 1; m <= n; ++m) {
    const double v = g.eval_deriv(m, 0.0);
    if (std::abs(v) > kFlatTol * std::max(1.0, std::abs(g0)))
      throw PreconditionError("standard z requires g^(m)(0) = 0 for m = 1.." + std::to_string(n) +
                              "; fails at order " + std::to_string(m) + " (value " + format_real(v) + ")");
  }
  const double factor = 2.0 * b / (g0 * g0 * g0);
  const double offset = -b / (g0 * g0);
  std::vector<Segment> segs;
  for (const auto& s : g.pieces().segments()) {
    const double lo = std::max(s.lo, 0.0);
    const double hi = std::min(s.hi, 1.0);
    if (lo < hi) segs.push_back({lo, hi, s.piece.affine(factor, offset)});
  }
  return ZFunction(Piecewise(std::move(segs)), "standard");
}

ZFunction z_min_poly(const PiecewiseWindow& g, double b, int n) {
  const auto t = boundary_targets(g, b, n);
  auto p = hermite_two_point(0.0, t.at0, 1.0, t.at1);
  return ZFunction(Piecewise({{0.0, 1.0, std::move(p)}}), "minpoly n=" + std::to_string(n));
}

ZFunction z_small_support(const PiecewiseWindow& g, double b, int N, int n, MidJoiner mid) {
  const auto j = small_support_junctions(b, N);
  require_order(g, n);
  auto psi = std::make_shared<const Periodization>(g);
  const auto dl = outer_piece_derivatives(*psi, b, true, n, j.xl, Side::Left);
  const auto dr = outer_piece_derivatives(*psi, b, false, n, j.xr, Side::Right);
  const std::string base = "smallsupport N=" + std::to_string(N) + " n=" + std::to_string(n);

  if (mid == MidJoiner::AntisymmetricTrig) {
    if (auto trig = antisymmetric_trig(j.xl, dl)) {
      for (int m = 0; m <= n; ++m) {
        const double want = dr[static_cast<std::size_t>(m)];
        const double got = trig->deriv(m, j.xr);
        if (std::abs(got - want) > kJunctionTol * std::max(1.0, std::abs(want)))
          throw PreconditionError("antisymmetric joiner misses the right junction at order " + std::to_string(m) +
                                  " (requires an even window)");
      }
      return assemble_small_support(psi, b, j, std::move(*trig), base + " mid=antisymmetric-trig");
    }
  }
  auto poly = hermite_two_point(j.xl, dl, j.xr, dr);
  return assemble_small_support(psi, b, j, std::move(poly), base + " mid=hermite");
}

ZFunction z_small_support(const PiecewiseWindow& g, double b, int N, Piece mid) {
  const auto j = small_support_junctions(b, N);
  auto psi = std::make_shared<const Periodization>(g);
  return assemble_small_support(psi, b, j, std::move(mid), "smallsupport N=" + std::to_string(N) + " mid=custom");
}

ZFunction recover_z(const DualWindow& h, const PiecewiseWindow& g, double b) {
  require_b(b);
  auto psi = std::make_shared<const Periodization>(g);
  auto fn = [h, psi, b](int, double x, Side side) {
    if (x <= 0.0 || x >= 1.0) {
      if (const ZFunction* z = h.z()) return z->deriv_sided(0, x, side);
      throw EndpointUndefinedError("recovered z is undefined at x=" + format_real(x) +
                                   " (g(x-1) = 0 and h carries no parametrization)");
    }
    return (h(x) - b * (*psi)(x)) / psi->window()(x - 1.0);
  };
  return ZFunction(Piecewise({{0.0, 1.0, Piece::custom(fn, 0)}}), "recovered");
}

}  // namespace gabordual
