#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gabordual/piece.hpp"

namespace gabordual {

/// Smoothness class C^n; std::nullopt stands for C^infinity.
using Smoothness = std::optional<int>;

std::string to_string(const Smoothness& s);

/// A real window supported on [-1,1], stored as analytic pieces with exact
/// derivatives. Immutable; concurrent evaluation is safe.
class PiecewiseWindow {
 public:
  /// Pieces must cover exactly [-1,1]. `max_order` caps the derivative order
  /// served (it is also clamped to what the pieces can supply).
  PiecewiseWindow(std::string name, Piecewise pieces, Smoothness declared, int max_order = 20);

  const std::string& name() const { return name_; }
  const Piecewise& pieces() const { return pieces_; }
  int max_order() const { return max_order_; }
  const Smoothness& declared_smoothness() const { return declared_; }

  /// d^m g/dx^m at x; at a knot the piece to the right is used, so g(1) = 0.
  double eval_deriv(int m, double x) const { return eval_deriv_sided(m, x, Side::Right); }
  /// One-sided limit of g^(m) at x using only the piece on `side`.
  double eval_deriv_sided(int m, double x, Side side) const;
  double operator()(double x) const { return eval_deriv(0, x); }

  /// Piece boundaries, ascending, including -1 and 1.
  std::vector<double> knots() const { return pieces_.knots(); }

 private:
  std::string name_;
  Piecewise pieces_;
  Smoothness declared_;
  int max_order_;
};

double eval_deriv(const PiecewiseWindow& w, int m, double x);
double eval_deriv_sided(const PiecewiseWindow& w, int m, double x, Side side);

/// Names accepted by builtin(): hann, blackman, b2spline, bump_example.
const std::vector<std::string>& builtin_names();

/// Closed-form example windows. Throws ParameterError listing valid names.
PiecewiseWindow builtin(std::string_view name);

struct ValidationReport {
  int order = 0;
  double tol = 0.0;
  bool support_ok = false;          // pieces cover [-1,1]
  bool nonvanishing_ok = false;     // |g| > tol on the interior grid
  double min_abs_interior = 0.0;
  bool knots_ok = false;            // derivatives 0..n agree at interior knots
  double max_knot_mismatch = 0.0;
  bool boundary_ok = false;         // g^(m)(+-1) = 0 for m = 0..n
  double max_boundary_value = 0.0;
  std::vector<std::string> failures;
  bool pass() const { return support_ok && nonvanishing_ok && knots_ok && boundary_ok; }
};

/// Grid-based check of membership in the class of C^n windows supported on
/// [-1,1] and nonvanishing inside. Failures are reported, never thrown
/// (except n > max_order, which is a usage error).
ValidationReport validate_window(const PiecewiseWindow& w, int n, int grid_size = 4096,
                                 double tol = 1e-10);

/// True if g(x) = g(-x) on a dense grid within tol.
bool is_even(const PiecewiseWindow& w, int grid_size = 1024, double tol = 1e-12);

// Line-oriented piece files (see README for the format).

/// Parse piece lines into a piecewise function. `smoothness` receives the
/// optional `smoothness` directive (default 0).
Piecewise read_pieces(std::istream& in, Smoothness* smoothness = nullptr);
void write_pieces(std::ostream& out, const Piecewise& pieces, const Smoothness* smoothness = nullptr);

PiecewiseWindow read_window(std::istream& in, std::string name = "file");
PiecewiseWindow load_window_file(const std::string& path);

}  // namespace gabordual
