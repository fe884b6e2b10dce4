#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"
#include "gabordual/verify.hpp"

namespace gabordual {

namespace {

constexpr int kRuleSize = 32;

struct Rule {
  std::vector<double> x;  // on [-1,1]
  std::vector<double> w;
};

const Rule& gauss_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, kRuleSize>;
    Rule r;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.x.push_back(a[i]);
      r.w.push_back(w[i]);
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
    }
    return r;
  }();
  return rule;
}

}  // namespace

const std::vector<std::string>& test_signal_names() {
  static const std::vector<std::string> names{"gaussian", "bump", "chirp", "zero"};
  return names;
}

TestSignal test_signal(std::string_view name) {
  if (name == "gaussian")
    return {"gaussian", {-3.0, 3.0}, [](double x) { return std::abs(x) <= 3.0 ? std::exp(-x * x) : 0.0; }};
  if (name == "bump")
    return {"bump", {-2.0, 2.0}, [](double x) {
              const double t = x / 2.0;
              return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
            }};
  if (name == "chirp")
    return {"chirp", {-4.0, 4.0}, [](double x) {
              return std::abs(x) <= 4.0 ? std::cos(std::numbers::pi * x * x / 2.0) * std::exp(-x * x / 2.0) : 0.0;
            }};
  if (name == "zero") return {"zero", {-1.0, 1.0}, [](double) { return 0.0; }};
  std::string msg = "unknown test signal '" + std::string(name) + "'; expected one of:";
  for (const auto& n : test_signal_names()) msg += " " + n;
  throw ParameterError(msg);
}

double reconstruct(const TestSignal& f, const PiecewiseWindow& g, const DualWindow& h, const GaborGridParams& p) {
  if (p.M < 1 || p.K < 1) throw ParameterError("truncation parameters M and K must be at least 1");
  if (p.nodes_per_unit != 0 && p.nodes_per_unit < 16)
    throw ParameterError("quadrature needs at least 16 nodes per unit interval");
  if (p.eval_grid < 2) throw ParameterError("evaluation grid needs at least 2 points");
  if (f.support.lo < -p.K + 1 || f.support.hi > p.K - 1)
    throw ParameterError("signal support [" + format_real(f.support.lo) + ", " + format_real(f.support.hi) +
                         "] exceeds [-K+1, K-1] = [" + std::to_string(-p.K + 1) + ", " + std::to_string(p.K - 1) +
                         "]");

  const double lo = f.support.lo;
  const double hi = f.support.hi;
  const double dx = (hi - lo) / p.eval_grid;
  std::vector<double> xs(static_cast<std::size_t>(p.eval_grid));
  std::vector<double> fs(xs.size());
  double norm2 = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    xs[j] = lo + (static_cast<double>(j) + 0.5) * dx;
    fs[j] = f.f(xs[j]);
    norm2 += fs[j] * fs[j] * dx;
  }
  if (std::sqrt(norm2) < 1e-14) throw ParameterError("degenerate signal: L2 norm below 1e-14");

  const int panels = p.nodes_per_unit > 0
                         ? (p.nodes_per_unit + kRuleSize - 1) / kRuleSize
                         : std::max(1, static_cast<int>(std::ceil(std::numbers::pi * p.b * p.M / 12.0)));
  const auto& rule = gauss_rule();
  const double omega = 2.0 * std::numbers::pi * p.b;
  const std::size_t nm = static_cast<std::size_t>(2 * p.M + 1);

  // coeff[k][m + M] = <f, M_{bm} T_k g>
  std::vector<std::vector<std::complex<double>>> coeff(static_cast<std::size_t>(2 * p.K + 1),
                                                       std::vector<std::complex<double>>(nm));
  for (int k = -p.K; k <= p.K; ++k) {
    auto& row = coeff[static_cast<std::size_t>(k + p.K)];
    // Integrate over [k-1, k+1] intersected with supp f, split at k.
    for (double a0 : {k - 1.0, static_cast<double>(k)}) {
      const double a = std::max(a0, lo);
      const double c = std::min(a0 + 1.0, hi);
      if (!(a < c)) continue;
      const double width = (c - a) / panels;
      for (int q = 0; q < panels; ++q) {
        const double pa = a + q * width;
        const double half = width / 2.0;
        const double mid = pa + half;
        for (std::size_t r = 0; r < rule.x.size(); ++r) {
          const double x = mid + half * rule.x[r];
          const double v = rule.w[r] * half * f.f(x) * g(x - k);
          if (v == 0.0) continue;
          for (int m = -p.M; m <= p.M; ++m)
            row[static_cast<std::size_t>(m + p.M)] += v * std::polar(1.0, -omega * m * x);
        }
      }
    }
  }

  double err2 = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double x = xs[j];
    double rec = 0.0;
    for (int k = -p.K; k <= p.K; ++k) {
      const double hv = h(x - k);
      if (hv == 0.0) continue;
      const auto& row = coeff[static_cast<std::size_t>(k + p.K)];
      std::complex<double> s = 0.0;
      for (int m = -p.M; m <= p.M; ++m) s += row[static_cast<std::size_t>(m + p.M)] * std::polar(1.0, omega * m * x);
      rec += hv * s.real();
    }
    err2 += (fs[j] - rec) * (fs[j] - rec) * dx;
  }
  return std::sqrt(err2 / norm2);
}

}  // namespace gabordual
