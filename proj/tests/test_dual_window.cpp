#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gabordual/dual_window.hpp"
#include "gabordual/error.hpp"
#include "gabordual/zgen.hpp"

using namespace gabordual;

namespace {

constexpr double pi = std::numbers::pi;
const double b_osc = 7.0 / (3.0 * pi);

ZFunction constant_z(double c) { return ZFunction(Piecewise({{0.0, 1.0, Piece::polynomial({c})}}), "const"); }

void check_intervals(const std::vector<Interval>& got, const std::vector<Interval>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].lo == doctest::Approx(want[i].lo).epsilon(1e-15));
    CHECK(got[i].hi == doctest::Approx(want[i].hi).epsilon(1e-15));
  }
}

}  // namespace

TEST_CASE("kmax regression values") {
  CHECK(kmax(0.6) == 1);
  CHECK(kmax(b_osc) == 2);
  CHECK(kmax(0.5) == 0);
  CHECK(kmax(0.4) == 0);
  CHECK(kmax(2.0 / 3.0) == 1);  // b/(1-b) = 2 exactly
  CHECK(kmax(0.7) == 2);
  CHECK_THROWS_AS(kmax(1.0), ParameterError);
  CHECK_THROWS_AS(kmax(0.0), ParameterError);
}

TEST_CASE("support sets") {
  check_intervals(support_set(0.6), {{-2.0, -5.0 / 3.0}, {-1.0, 1.0}, {5.0 / 3.0, 2.0}});
  check_intervals(support_set(b_osc), {{-3.0, -6.0 * pi / 7.0},
                                       {-2.0, -3.0 * pi / 7.0},
                                       {-1.0, 1.0},
                                       {3.0 * pi / 7.0, 2.0},
                                       {6.0 * pi / 7.0, 3.0}});
  check_intervals(support_set(0.3), {{-1.0, 1.0}});
}

TEST_CASE("seam points") {
  const auto s = seam_points(0.6);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == -2.0);
  CHECK(s[3] == 0.0);
  CHECK(s[5] == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("centre value and support for hann at b = 3/5") {
  const auto g = builtin("hann");
  const double b = 0.6;
  const auto h = build_dual(g, z_standard(g, b), b);
  CHECK(h(0.0) == doctest::Approx(0.6));
  CHECK(h.center_value().value() == doctest::Approx(0.6));
  for (double x : {1.01, 1.3, 1.66, -1.2, -1.6, 2.01, -2.5, 7.0}) CHECK(h(x) == 0.0);
  CHECK(h(1.8) != 0.0);
  CHECK(h(-1.8) != 0.0);
  check_intervals(h.support(), support_set(b));
}

TEST_CASE("[0,1] and [-1,0) branches in closed form") {
  const auto g = builtin("bump_example");
  const double b = 0.6;
  const auto z = z_min_poly(g, b, 2);
  const auto h = build_dual(g, z, b);
  const Periodization psi(g);
  for (double x : {0.1, 0.5, 0.93}) CHECK(h(x) == doctest::Approx(g(x - 1) * z(x) + b * psi(x)).epsilon(1e-14));
  for (double x : {-0.9, -0.5, -0.07})
    CHECK(h(x) == doctest::Approx(-g(x + 1) * z(x + 1) + b * psi(x + 1)).epsilon(1e-14));
}

TEST_CASE("zero parametrization gives a truncated b psi") {
  const auto g = builtin("bump_example");
  const double b = 0.6;
  const auto h = build_dual(g, constant_z(0.0), b);
  const Periodization psi(g);
  for (double x : {-0.8, -0.2, 0.3, 0.99}) CHECK(h(x) == doctest::Approx(b * psi(x)));
  CHECK(h.eval_sided(1.0, Side::Left) == doctest::Approx(b * psi(1.0)));
  CHECK(h.eval_sided(1.0, Side::Right) == 0.0);
}

TEST_CASE("pieces vanish at their outer ends") {
  const auto g = builtin("hann");
  for (double b : {0.6, b_osc, 0.8}) {
    const auto z = z_min_poly(g, b, 1);
    const Periodization psi(g);
    for (int k = 1; k <= kmax(b); ++k) {
      CHECK(std::abs(gamma_k(psi, z, b, k, k / b)) < 1e-15);
      CHECK(std::abs(gamma_k(psi, z, b, k, k + 1.0)) < 1e-14);
      CHECK(std::abs(eta_k(psi, z, b, k, -k - 1.0)) < 1e-14);
      CHECK(std::abs(eta_k(psi, z, b, k, -k / b)) < 1e-15);
      CHECK(gamma_k(psi, z, b, k, k / b - 0.01) == 0.0);
    }
  }
}

TEST_CASE("gamma_1 against an independent evaluation") {
  const auto g = builtin("hann");
  const double b = 0.6;
  const auto z = z_standard(g, b);
  const Periodization psi(g);
  const double x = 1.85;
  const double u = x - 1.0;
  const double d = 1.0 / b - 1.0;
  // hann: g(t) = cos^2(pi t / 2), psi = 1, z = b cos(pi u)
  auto hann = [](double t) { return std::abs(t) <= 1 ? std::pow(std::cos(pi * t / 2), 2) : 0.0; };
  const double expect = -hann(u - 1 - d) / hann(u - d) * (hann(u - 1) * b * std::cos(pi * u) + b);
  CHECK(gamma_k(psi, z, b, 1, x) == doctest::Approx(expect).epsilon(1e-14));
  // duality identity g(x - 1/b) gamma_1(x) = -g(x - 1/b - 1) gamma_0(x - 1)
  CHECK(g(x - 1 / b) * gamma_k(psi, z, b, 1, x) ==
        doctest::Approx(-g(x - 1 / b - 1) * gamma_k(psi, z, b, 0, x - 1)).epsilon(1e-13));
}

TEST_CASE("telescoping identity across pieces") {
  for (const char* name : {"hann", "bump_example"}) {
    const auto g = builtin(name);
    const double b = b_osc;
    const auto z = z_min_poly(g, b, 1);
    const Periodization psi(g);
    for (int k = 1; k <= kmax(b); ++k) {
      for (int i = 0; i < 200; ++i) {
        const double x = k / b + (k + 1 - k / b) * (i + 0.5) / 200;
        const double lhs = g(x - k / b) * gamma_k(psi, z, b, k, x) + g(x - k / b - 1) * gamma_k(psi, z, b, k - 1, x - 1);
        CHECK(std::abs(lhs) < 1e-11);
        const double y = -x;
        const double rhs = g(y + k / b) * eta_k(psi, z, b, k, y) + g(y + k / b + 1) * eta_k(psi, z, b, k - 1, y + 1);
        CHECK(std::abs(rhs) < 1e-11);
      }
    }
  }
}

TEST_CASE("even window with antisymmetric z mirrors the pieces") {
  const auto g = builtin("hann");
  const double b = b_osc;
  const auto z = z_standard(g, b);
  const Periodization psi(g);
  for (int k = 0; k <= kmax(b); ++k) {
    for (int i = 0; i <= 50; ++i) {
      const double x = k / b + (k + 1 - k / b) * i / 50.0;
      CHECK(eta_k(psi, z, b, k, -x) == doctest::Approx(gamma_k(psi, z, b, k, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("seam snapping") {
  const auto g = builtin("hann");
  const double b = 0.6;
  const auto h = build_dual(g, z_standard(g, b), b);
  CHECK(h(1e-14) == h(0.0));
  CHECK(h(5.0 / 3.0 + 5e-14) == h(5.0 / 3.0));
}

TEST_CASE("canonical painless dual for hann") {
  const auto g = builtin("hann");
  const double b = 0.4;
  const auto h = canonical_painless_dual(g, b);
  for (double x : {-0.9, -0.3, 0.0, 0.5, 0.77}) {
    const double s = std::sin(pi * x);
    CHECK(h(x) == doctest::Approx(b * g(x) / (1 - s * s / 2)).epsilon(1e-14));
  }
  CHECK(h(1.2) == 0.0);
  CHECK_FALSE(h.is_constructed());
  CHECK_THROWS_AS(canonical_painless_dual(g, 0.6), ParameterError);
}

TEST_CASE("wrapped functions vanish outside their support") {
  const auto h = DualWindow::from_function(0.6, {{-0.5, 0.5}}, [](double) { return 1.0; });
  CHECK(h(0.0) == 1.0);
  CHECK(h(0.6) == 0.0);
  CHECK(h.eval_sided(0.5, Side::Left) == 1.0);
  CHECK(h.eval_sided(0.5, Side::Right) == 0.0);
}

TEST_CASE("TSV samples") {
  std::ostringstream out;
  write_samples_tsv(out, [](double x) { return 2 * x; }, 0.0, 1.0, 3, true);
  CHECK(out.str() == "x\th\n0\t0\n0.5\t1\n1\t2\n");
  std::ostringstream bad;
  CHECK_THROWS_AS(write_samples_tsv(bad, [](double x) { return x; }, 0.0, 1.0, 1, false), ParameterError);
}
