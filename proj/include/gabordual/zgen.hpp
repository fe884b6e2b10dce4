#pragma once

#include <vector>

#include "gabordual/dual_window.hpp"
#include "gabordual/periodization.hpp"
#include "gabordual/zfunction.hpp"

namespace gabordual {

/// Values z^(m)(0) and z^(m)(1), m = 0..n, that make h_z n times
/// continuously differentiable.
struct BoundaryTargets {
  int n = 0;
  double b = 0.0;
  std::vector<double> at0;
  std::vector<double> at1;
};

BoundaryTargets boundary_targets(const PiecewiseWindow& g, double b, int n);

/// z = (b / g(0)^3) (2 g - g(0)) on [0,1]. Requires g^(m)(0) = 0 for
/// m = 1..n with n the declared smoothness (capped at max_order); the first
/// failing order is named in the PreconditionError.
ZFunction z_standard(const PiecewiseWindow& g, double b);

/// Degree 2n+1 polynomial meeting all boundary targets of order n.
ZFunction z_min_poly(const PiecewiseWindow& g, double b, int n);

enum class MidJoiner { Hermite, AntisymmetricTrig };

/// z = b psi / g on [0, 1 - N(1/b - 1)], -b psi / g(. - 1) on [N(1/b - 1), 1],
/// joined in between. Requires b in [N/(N+1), 2N/(2N+1)).
ZFunction z_small_support(const PiecewiseWindow& g, double b, int N, int n, MidJoiner mid);
/// Same outer pieces with a caller-supplied middle piece.
ZFunction z_small_support(const PiecewiseWindow& g, double b, int N, Piece mid);

/// z = (h - b psi) / g(. - 1) on (0,1). At x = 0 and x = 1 a constructed
/// dual supplies the one-sided limits of its own z; any other h raises
/// EndpointUndefinedError there.
ZFunction recover_z(const DualWindow& h, const PiecewiseWindow& g, double b);

/// Derivatives 0..n of b psi / g (left outer piece) or -b psi / g(. - 1)
/// (right outer piece) at x, from the given side.
std::vector<double> outer_piece_derivatives(const Periodization& psi, double b, bool left_piece, int n, double x,
                                            Side side);

}  // namespace gabordual
