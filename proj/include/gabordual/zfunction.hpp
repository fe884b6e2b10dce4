#pragma once

#include <iosfwd>
#include <string>

#include "gabordual/piece.hpp"

namespace gabordual {

/// Real function on [0,1] stored as analytic pieces. Immutable.
class ZFunction {
 public:
  /// Pieces must cover exactly [0,1].
  ZFunction(Piecewise pieces, std::string description);

  /// Value and derivatives; interior breakpoints use the right piece and
  /// x = 1 uses the last piece. Arguments within 1e-13 of [0,1] are clamped;
  /// anything further out throws ParameterError.
  double operator()(double x) const { return deriv(0, x); }
  double deriv(int m, double x) const;
  /// One-sided limit at x; at the ends of [0,1] the only available side is used.
  double deriv_sided(int m, double x, Side side) const;

  int max_order() const { return pieces_.max_order(); }
  const Piecewise& pieces() const { return pieces_; }
  const std::string& description() const { return description_; }

  /// z + c, keeping the piece structure.
  ZFunction shifted(double c) const;

 private:
  Piecewise pieces_;
  std::string description_;
};

/// Writes z in the piece-file format. Closure pieces cannot be written and
/// raise ParameterError.
void write_z(std::ostream& out, const ZFunction& z);
ZFunction read_z(std::istream& in, std::string description = "file");
ZFunction load_z_file(const std::string& path);

}  // namespace gabordual
