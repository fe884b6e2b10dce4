#pragma once

#include <cstdint>
#include <vector>

#include "gabordual/window.hpp"

namespace gabordual {

/// Exponent vector (m_1, ..., m_n) with sum_j j * m_j = n, one per term of
/// Faa di Bruno's formula.
struct PartitionMultiIndex {
  std::vector<int> m;

  int order() const;   // sum_j j * m_j
  int total() const;   // sum_j m_j
  bool operator==(const PartitionMultiIndex&) const = default;
};

/// All multi-indices for order n >= 1 in descending lexicographic order,
/// e.g. n = 3 gives (3,0,0), (1,1,0), (0,0,1). Throws ParameterError for
/// n < 1 or n > 20.
std::vector<PartitionMultiIndex> partitions(int n);

/// n! / (m_1! m_2! ... m_n!) in exact integer arithmetic.
std::uint64_t multinomial(int n, const PartitionMultiIndex& idx);

/// d^n/dx^n of 1/h(x), given inner[j] = h^(j)(x) for j = 0..n.
double reciprocal_derivative(int n, const std::vector<double>& inner);

/// psi = 1 / sum_k g(. + k), the reciprocal of the integer periodization.
/// On [0,1] only the shifts g(x) and g(x-1) meet the support.
class Periodization {
 public:
  explicit Periodization(PiecewiseWindow window);

  const PiecewiseWindow& window() const { return window_; }

  double operator()(double x) const;                      // psi(x)
  double deriv(int m, double x) const;                    // right-sided convention at breakpoints
  double deriv_sided(int m, double x, Side side) const;   // one-sided limit
  /// Closed-form psi^(m)(0) from g^(j)(0) alone (drops the g^(j)(-1) terms).
  double deriv_at_zero(int m) const;

 private:
  PiecewiseWindow window_;
  double inv_g0_;
};

double psi_eval(const Periodization& p, double x);
double psi_deriv(const Periodization& p, int m, double x);
double psi_deriv_at_zero(const Periodization& p, int m);

/// Denominators below this magnitude are treated as a vanishing periodization.
inline constexpr double kDegenerateDenominator = 1e-14;

}  // namespace gabordual
