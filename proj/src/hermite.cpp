#include "gabordual/hermite.hpp"

#include <vector>

#include "gabordual/error.hpp"

namespace gabordual {

Piece hermite_two_point(double x0, std::span<const double> d0, double x1, std::span<const double> d1) {
  if (d0.size() != d1.size() || d0.empty())
    throw ParameterError("hermite_two_point: need the same non-zero number of conditions at both nodes");
  if (!(x0 < x1)) throw ParameterError("hermite_two_point: nodes must satisfy x0 < x1");

  const std::size_t k = d0.size();  // n + 1 conditions per node
  const std::size_t total = 2 * k;
  std::vector<double> nodes(total);
  for (std::size_t i = 0; i < total; ++i) nodes[i] = i < k ? x0 : x1;

  auto fact = [](std::size_t j) {
    double f = 1.0;
    for (std::size_t i = 2; i <= j; ++i) f *= static_cast<double>(i);
    return f;
  };

  // col[i] holds f[z_i, ..., z_{i+order}] for the current order.
  std::vector<double> col(total);
  for (std::size_t i = 0; i < total; ++i) col[i] = i < k ? d0[0] : d1[0];
  std::vector<double> newton{col[0]};
  for (std::size_t order = 1; order < total; ++order) {
    std::vector<double> next(total - order);
    for (std::size_t i = 0; i + order < total; ++i) {
      const double za = nodes[i];
      const double zb = nodes[i + order];
      if (za == zb) {
        const auto& d = za == x0 ? d0 : d1;
        next[i] = d[order] / fact(order);
      } else {
        next[i] = (col[i + 1] - col[i]) / (zb - za);
      }
    }
    col = std::move(next);
    newton.push_back(col[0]);
  }

  // Expand sum_j a_j prod_{i<j} (x - z_i) in powers of s = x - origin.
  const double origin = 0.5 * (x0 + x1);
  std::vector<double> basis{1.0};
  std::vector<double> coeffs(total, 0.0);
  for (std::size_t j = 0; j < total; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += newton[j] * basis[i];
    basis = poly_multiply(basis, {origin - nodes[j], 1.0});
  }
  return Piece::polynomial(std::move(coeffs), origin);
}

}  // namespace gabordual
