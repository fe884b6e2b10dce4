#pragma once

#include <span>

#include "gabordual/piece.hpp"

namespace gabordual {

/// Two-point Hermite interpolant: the unique polynomial of degree <= 2n+1
/// with p^(m)(x0) = d0[m] and p^(m)(x1) = d1[m] for m = 0..n, where
/// n + 1 = d0.size() = d1.size(). Built from confluent divided differences on
/// the doubled node set and expanded about (x0 + x1) / 2.
Piece hermite_two_point(double x0, std::span<const double> d0, double x1, std::span<const double> d1);

}  // namespace gabordual
