#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gabordual/error.hpp"
#include "gabordual/hermite.hpp"
#include "gabordual/verify.hpp"
#include "gabordual/zgen.hpp"

using namespace gabordual;

namespace {

constexpr double pi = std::numbers::pi;

double falling(int k, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (k - i);
  return r;
}

// Monomial coefficients solving the confluent Vandermonde system directly.
Eigen::VectorXd hermite_by_vandermonde(double x0, const std::vector<double>& d0, double x1,
                                       const std::vector<double>& d1) {
  const int k = static_cast<int>(d0.size());
  const int deg = 2 * k - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * k, deg + 1);
  Eigen::VectorXd rhs(2 * k);
  for (int m = 0; m < k; ++m) {
    for (int j = m; j <= deg; ++j) {
      a(m, j) = falling(j, m) * std::pow(x0, j - m);
      a(k + m, j) = falling(j, m) * std::pow(x1, j - m);
    }
    rhs(m) = d0[static_cast<std::size_t>(m)];
    rhs(k + m) = d1[static_cast<std::size_t>(m)];
  }
  return a.fullPivLu().solve(rhs);
}

double horner(const Eigen::VectorXd& c, double x) {
  double s = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) s = s * x + c(i);
  return s;
}

double binom(int m, int l) {
  double r = 1.0;
  for (int i = 1; i <= l; ++i) r = r * (m - l + i) / i;
  return r;
}

}  // namespace

TEST_CASE("two-point Hermite interpolation matches a Vandermonde solve") {
  const std::vector<double> d0{0.7, -0.3, 1.1, 2.0};
  const std::vector<double> d1{-0.2, 0.4, -3.0, 0.5};
  const auto p = hermite_two_point(0.25, d0, 0.8, d1);
  const auto c = hermite_by_vandermonde(0.25, d0, 0.8, d1);
  for (double x : {0.25, 0.3, 0.5, 0.77, 0.8}) CHECK(p(x) == doctest::Approx(horner(c, x)).epsilon(1e-9));
  for (int m = 0; m < 4; ++m) {
    CHECK(p.deriv(m, 0.25) == doctest::Approx(d0[static_cast<std::size_t>(m)]).epsilon(1e-10));
    CHECK(p.deriv(m, 0.8) == doctest::Approx(d1[static_cast<std::size_t>(m)]).epsilon(1e-10));
  }
  REQUIRE(p.is_polynomial());
  CHECK(p.as_polynomial()->coeffs.size() == 8);
}

TEST_CASE("boundary targets at order zero") {
  const auto g = builtin("bump_example");
  const double b = 0.6;
  const auto t = boundary_targets(g, b, 0);
  const double g0 = g(0.0);
  CHECK(t.at0[0] == doctest::Approx(b / (g0 * g0)));
  CHECK(t.at1[0] == doctest::Approx(-b / (g0 * g0)));
}

TEST_CASE("boundary targets of first and second order") {
  const auto g = builtin("bump_example");
  const double b = 0.7;
  const auto t = boundary_targets(g, b, 2);
  const double g0 = g(0.0);
  const double g1 = g.eval_deriv(1, 0.0);
  const double g2 = g.eval_deriv(2, 0.0);
  CHECK(t.at0[1] == doctest::Approx(-2 * b * g1 / std::pow(g0, 3)).epsilon(1e-13));
  CHECK(t.at1[1] == doctest::Approx(2 * b * g1 / std::pow(g0, 3)).epsilon(1e-13));
  CHECK(t.at0[2] ==
        doctest::Approx(6 * b * g1 * g1 / std::pow(g0, 4) - 2 * b * g2 / std::pow(g0, 3)).epsilon(1e-13));
}

TEST_CASE("boundary targets satisfy their recursion") {
  const auto g = builtin("bump_example");
  const double b = 0.65;
  const int n = 2;
  const auto t = boundary_targets(g, b, n);
  const Periodization psi(g);
  const double g0 = g(0.0);
  for (int m = 1; m <= n; ++m) {
    double s0 = t.at0[static_cast<std::size_t>(m)] - b * psi.deriv_at_zero(m) / g0;
    double s1 = t.at1[static_cast<std::size_t>(m)] + b * psi.deriv_at_zero(m) / g0;
    for (int l = 1; l <= m; ++l) {
      s0 += binom(m, l) * g.eval_deriv(l, 0.0) / g0 * t.at0[static_cast<std::size_t>(m - l)];
      s1 += binom(m, l) * g.eval_deriv(l, 0.0) / g0 * t.at1[static_cast<std::size_t>(m - l)];
    }
    CHECK(std::abs(s0) < 1e-12);
    CHECK(std::abs(s1) < 1e-12);
  }
}

TEST_CASE("flat windows give vanishing higher targets") {
  const auto t = boundary_targets(builtin("hann"), 0.6, 1);
  CHECK(t.at0[0] == doctest::Approx(0.6));
  CHECK(std::abs(t.at0[1]) < 1e-15);
  CHECK(std::abs(t.at1[1]) < 1e-15);
}

TEST_CASE("standard z for hann is b cos(pi x)") {
  const double b = 0.6;
  const auto z = z_standard(builtin("hann"), b);
  for (double x : {0.0, 0.2, 0.5, 0.81, 1.0}) CHECK(z(x) == doctest::Approx(b * std::cos(pi * x)).epsilon(1e-14));
  CHECK(z(0.5) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("standard z for blackman") {
  const double b = 0.6;
  const auto z = z_standard(builtin("blackman"), b);
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    const double v = b * (-0.16 + std::cos(pi * x) + 0.16 * std::cos(2 * pi * x));
    CHECK(z(x) == doctest::Approx(v).epsilon(1e-14));
  }
  // z(0) = b / g(0)^2 with g(0) = 1
  CHECK(z(0.0) == doctest::Approx(b));
}

TEST_CASE("standard z requires flat windows at the origin") {
  try {
    z_standard(builtin("bump_example"), 0.6);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("order 1") != std::string::npos);
  }
}

TEST_CASE("minimal polynomial of order zero is linear") {
  const auto g = builtin("bump_example");
  const double b = 0.6;
  const double g0 = g(0.0);
  const auto z = z_min_poly(g, b, 0);
  for (double x : {0.0, 0.3, 1.0}) CHECK(z(x) == doctest::Approx(b / (g0 * g0) * (1 - 2 * x)).epsilon(1e-14));
}

TEST_CASE("minimal polynomial for hann at order one") {
  const double b = 0.6;
  const auto z = z_min_poly(builtin("hann"), b, 1);
  for (double x : {0.0, 0.25, 0.5, 0.9, 1.0})
    CHECK(z(x) == doctest::Approx(b * (4 * x * x * x - 6 * x * x + 1)).epsilon(1e-13));
}

TEST_CASE("minimal polynomial meets all targets") {
  for (int n = 0; n <= 2; ++n) {
    const auto g = builtin("bump_example");
    const double b = 7.0 / (3.0 * pi);
    const auto t = boundary_targets(g, b, n);
    const auto z = z_min_poly(g, b, n);
    for (int m = 0; m <= n; ++m) {
      CHECK(std::abs(z.deriv(m, 0.0) - t.at0[static_cast<std::size_t>(m)]) < 1e-12);
      CHECK(std::abs(z.deriv(m, 1.0) - t.at1[static_cast<std::size_t>(m)]) < 1e-12);
    }
  }
}

TEST_CASE("standard and minimal z agree at the ends for a partition of unity") {
  const double b = 0.6;
  const auto zs = z_standard(builtin("hann"), b);
  const auto zm = z_min_poly(builtin("hann"), b, 1);
  for (int m = 0; m <= 1; ++m) {
    CHECK(zs.deriv(m, 0.0) == doctest::Approx(zm.deriv(m, 0.0)).epsilon(1e-13));
    CHECK(zs.deriv(m, 1.0) == doctest::Approx(zm.deriv(m, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("small-support z for hann, N = 1") {
  const auto g = builtin("hann");
  const double b = 0.6;
  const auto z = z_small_support(g, b, 1, 1, MidJoiner::AntisymmetricTrig);
  const auto& segs = z.pieces().segments();
  REQUIRE(segs.size() == 3);
  CHECK(segs[0].hi == doctest::Approx(1.0 / 3.0));
  CHECK(segs[2].lo == doctest::Approx(2.0 / 3.0));
  // psi = 1 for hann
  for (double x : {0.05, 0.2, 0.33}) CHECK(z(x) == doctest::Approx(b / g(x)).epsilon(1e-14));
  for (double x : {0.7, 0.95}) CHECK(z(x) == doctest::Approx(-b / g(x - 1)).epsilon(1e-14));
  // joiner c1 cos(pi x) + c3 cos(3 pi x)
  const auto* t = segs[1].piece.as_trig();
  REQUIRE(t != nullptr);
  REQUIRE(t->cos_coeffs.size() == 3);
  CHECK(t->cos_coeffs[1] == 0.0);
  CHECK(t->a0 == 0.0);
  CHECK(is_antisymmetric(z, 1024, 1e-12));
}

TEST_CASE("small-support joiners are C^n at the junctions") {
  const double b = 0.6;
  for (auto mid : {MidJoiner::Hermite, MidJoiner::AntisymmetricTrig}) {
    const auto z = z_small_support(builtin("hann"), b, 1, 1, mid);
    for (double x : {1.0 / 3.0, 2.0 / 3.0}) {
      for (int m = 0; m <= 1; ++m) {
        CHECK(z.deriv_sided(m, x, Side::Left) == doctest::Approx(z.deriv_sided(m, x, Side::Right)).epsilon(1e-9));
      }
    }
  }
  const auto zb = z_small_support(builtin("bump_example"), b, 1, 2, MidJoiner::Hermite);
  const double xl = 1.0 - (1.0 / b - 1.0);
  for (int m = 0; m <= 2; ++m)
    CHECK(zb.deriv_sided(m, xl, Side::Left) == doctest::Approx(zb.deriv_sided(m, xl, Side::Right)).epsilon(1e-9));
}

TEST_CASE("small-support parameter range") {
  CHECK_THROWS_AS(z_small_support(builtin("hann"), 0.8, 1, 1, MidJoiner::Hermite), ParameterError);
  CHECK_THROWS_AS(z_small_support(builtin("hann"), 0.45, 1, 1, MidJoiner::Hermite), ParameterError);
  CHECK_NOTHROW(z_small_support(builtin("hann"), 0.5, 1, 1, MidJoiner::Hermite));
  CHECK_NOTHROW(z_small_support(builtin("hann"), 0.7, 2, 1, MidJoiner::Hermite));
}

TEST_CASE("antisymmetric joiner needs an even window") {
  CHECK_THROWS_AS(z_small_support(builtin("bump_example"), 0.6, 1, 2, MidJoiner::AntisymmetricTrig),
                  PreconditionError);
}

TEST_CASE("custom middle piece") {
  const auto z = z_small_support(builtin("hann"), 0.6, 1, Piece::polynomial({0.0}));
  CHECK(z(0.5) == 0.0);
  CHECK(z(0.1) == doctest::Approx(0.6 / builtin("hann")(0.1)));
}

TEST_CASE("recovered z inverts the construction") {
  struct Case {
    const char* window;
    double b;
    int which;
  };
  for (const auto& c : {Case{"hann", 0.6, 0}, Case{"hann", 0.6, 1}, Case{"blackman", 0.6, 0},
                        Case{"bump_example", 7.0 / (3.0 * pi), 1}, Case{"hann", 0.6, 2}}) {
    CAPTURE(c.window);
    CAPTURE(c.which);
    const auto g = builtin(c.window);
    const auto z = c.which == 0   ? z_standard(g, c.b)
                   : c.which == 1 ? z_min_poly(g, c.b, g.declared_smoothness().value_or(2))
                                  : z_small_support(g, c.b, 1, 1, MidJoiner::AntisymmetricTrig);
    const auto h = build_dual(g, z, c.b);
    const auto r = recover_z(h, g, c.b);
    double worst = 0.0;
    for (int i = 1; i <= 1024; ++i) {
      const double x = static_cast<double>(i) / 1025.0;
      worst = std::max(worst, std::abs(r(x) - z(x)));
    }
    CHECK(worst < 1e-10);
    CHECK(r(0.0) == z(0.0));
    CHECK(r(1.0) == z(1.0));
  }
}

TEST_CASE("recovered z at the midpoint for hann") {
  const auto g = builtin("hann");
  const auto h = build_dual(g, z_standard(g, 0.6), 0.6);
  CHECK(std::abs(recover_z(h, g, 0.6)(0.5)) < 1e-15);
}

TEST_CASE("recovered z of the zero function") {
  const auto g = builtin("hann");
  const double b = 0.6;
  const auto zero = DualWindow::from_function(b, {{-1.0, 1.0}}, [](double) { return 0.0; });
  const auto r = recover_z(zero, g, b);
  for (double x : {0.1, 0.5, 0.9}) CHECK(r(x) == doctest::Approx(-b / g(x - 1)));
  CHECK_THROWS_AS(r(0.0), EndpointUndefinedError);
  CHECK_THROWS_AS(r(1.0), EndpointUndefinedError);
}

TEST_CASE("z files round-trip") {
  const auto z = z_min_poly(builtin("bump_example"), 0.6, 2);
  std::stringstream s;
  write_z(s, z);
  const auto again = read_z(s);
  for (double x : {0.0, 0.4, 1.0}) CHECK(again(x) == doctest::Approx(z(x)).epsilon(1e-15));
  std::stringstream closure;
  CHECK_THROWS_AS(write_z(closure, z_small_support(builtin("hann"), 0.6, 1, 1, MidJoiner::Hermite)),
                  ParameterError);
}

TEST_CASE("z outside [0,1] is an error") {
  const auto z = z_standard(builtin("hann"), 0.6);
  CHECK(z(-1e-14) == z(0.0));
  CHECK_THROWS_AS(z(1.1), ParameterError);
}
