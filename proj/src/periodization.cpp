#include "gabordual/periodization.hpp"

#include <cmath>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"

namespace gabordual {

namespace {

constexpr int kMaxPartitionOrder = 20;

void enumerate(int j, int n, int remaining, std::vector<int>& cur, std::vector<PartitionMultiIndex>& out) {
  if (j > n) {
    if (remaining == 0) out.push_back({cur});
    return;
  }
  for (int mj = remaining / j; mj >= 0; --mj) {
    cur[static_cast<std::size_t>(j - 1)] = mj;
    enumerate(j + 1, n, remaining - j * mj, cur, out);
  }
  cur[static_cast<std::size_t>(j - 1)] = 0;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

int PartitionMultiIndex::order() const {
  int s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) s += static_cast<int>(j + 1) * m[j];
  return s;
}

int PartitionMultiIndex::total() const {
  int s = 0;
  for (int v : m) s += v;
  return s;
}

std::vector<PartitionMultiIndex> partitions(int n) {
  if (n < 1) throw ParameterError("partitions: order must be at least 1");
  if (n > kMaxPartitionOrder)
    throw ParameterError("partitions: order " + std::to_string(n) + " exceeds the supported maximum 20");
  std::vector<PartitionMultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate(1, n, n, cur, out);
  return out;
}

std::uint64_t multinomial(int n, const PartitionMultiIndex& idx) {
  if (n > kMaxPartitionOrder) throw ParameterError("multinomial: order exceeds 20");
  std::uint64_t r = factorial(n);
  for (int mj : idx.m) r /= factorial(mj);
  return r;
}

double reciprocal_derivative(int n, const std::vector<double>& inner) {
  if (inner.size() < static_cast<std::size_t>(n) + 1)
    throw ParameterError("reciprocal_derivative: need inner derivatives 0..n");
  const double h0 = inner[0];
  if (std::abs(h0) < kDegenerateDenominator)
    throw DegenerateWindowError("periodization vanishes (value " + format_real(h0) + ")");
  if (n == 0) return 1.0 / h0;

  double sum = 0.0;
  for (const auto& idx : partitions(n)) {
    const int k = idx.total();
    // outer: d^k (1/t) = (-1)^k k! / t^(k+1)
    double term = static_cast<double>(multinomial(n, idx)) * static_cast<double>(factorial(k)) *
                  ((k % 2 == 0) ? 1.0 : -1.0) / std::pow(h0, k + 1);
    for (std::size_t j = 0; j < idx.m.size(); ++j) {
      const int mj = idx.m[j];
      if (mj == 0) continue;
      term *= std::pow(inner[j + 1] / static_cast<double>(factorial(static_cast<int>(j + 1))), mj);
    }
    sum += term;
  }
  return sum;
}

Periodization::Periodization(PiecewiseWindow window) : window_(std::move(window)) {
  const double g0 = window_(0.0);
  if (std::abs(g0) < kDegenerateDenominator) throw DegenerateWindowError("g(0) = 0: window is degenerate");
  inv_g0_ = 1.0 / g0;
}

double Periodization::operator()(double x) const {
  const double t = x - std::floor(x);
  if (t == 0.0) return inv_g0_;
  const double d = window_(t) + window_(t - 1.0);
  if (std::abs(d) < kDegenerateDenominator)
    throw DegenerateWindowError("periodization vanishes at x=" + format_real(x));
  return 1.0 / d;
}

double Periodization::deriv_sided(int m, double x, Side side) const {
  // Reduce to (0,1] from the left and [0,1) from the right.
  const double t = (side == Side::Right) ? x - std::floor(x) : x - std::ceil(x) + 1.0;
  std::vector<double> inner(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j)
    inner[static_cast<std::size_t>(j)] =
        window_.eval_deriv_sided(j, t, side) + window_.eval_deriv_sided(j, t - 1.0, side);
  return reciprocal_derivative(m, inner);
}

double Periodization::deriv(int m, double x) const {
  if (m == 0) return (*this)(x);
  return deriv_sided(m, x, Side::Right);
}

double Periodization::deriv_at_zero(int m) const {
  if (m == 0) return inv_g0_;
  std::vector<double> inner(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) inner[static_cast<std::size_t>(j)] = window_.eval_deriv(j, 0.0);
  return reciprocal_derivative(m, inner);
}

double psi_eval(const Periodization& p, double x) { return p(x); }
double psi_deriv(const Periodization& p, int m, double x) { return p.deriv(m, x); }
double psi_deriv_at_zero(const Periodization& p, int m) { return p.deriv_at_zero(m); }

}  // namespace gabordual
