#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gabordual {

enum class Side { Left, Right };

/// Marker for evaluators that differentiate to any order.
inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

/// Closure evaluator: returns d^m f/dx^m at x. `side` tells which one-sided
/// limit is wanted when x sits on a breakpoint of the closure's own ingredients.
using DerivativeFn = std::function<double(int m, double x, Side side)>;

/// One analytic piece with exact derivatives.
///
/// Three kinds are provided: polynomials in powers of (x - origin),
/// trigonometric polynomials a0 + sum_k a_k cos(k pi x) + b_k sin(k pi x),
/// and closures that supply their own derivatives up to a declared order.
class Piece {
 public:
  struct Poly {
    double origin = 0.0;
    std::vector<double> coeffs;  // ascending powers of (x - origin)
  };
  struct Trig {
    double a0 = 0.0;
    std::vector<double> cos_coeffs;  // a_1, a_2, ...
    std::vector<double> sin_coeffs;  // b_1, b_2, ...
  };
  struct Custom {
    DerivativeFn fn;
    int max_order = 0;
  };

  static Piece polynomial(std::vector<double> coeffs, double origin = 0.0);
  static Piece trig(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs = {});
  static Piece custom(DerivativeFn fn, int max_order);

  /// d^m/dx^m at x. Throws UnsupportedOrderError when m exceeds max_order().
  double deriv(int m, double x, Side side = Side::Right) const;
  double operator()(double x) const { return deriv(0, x); }

  int max_order() const;

  /// factor * f + offset, preserving the representation kind.
  Piece affine(double factor, double offset) const;

  bool is_polynomial() const { return std::holds_alternative<Poly>(rep_); }
  bool is_trig() const { return std::holds_alternative<Trig>(rep_); }
  bool is_custom() const { return std::holds_alternative<Custom>(rep_); }
  const Poly* as_polynomial() const { return std::get_if<Poly>(&rep_); }
  const Trig* as_trig() const { return std::get_if<Trig>(&rep_); }

 private:
  explicit Piece(std::variant<Poly, Trig, Custom> rep) : rep_(std::move(rep)) {}
  std::variant<Poly, Trig, Custom> rep_;
};

struct Segment {
  double lo;
  double hi;
  Piece piece;
};

/// Ordered, gap-free list of segments on [front.lo, back.hi].
///
/// Lookup conventions: the right-sided lookup takes the segment with
/// lo <= x < hi, the left-sided one lo < x <= hi. Points outside the
/// domain report no segment.
class Piecewise {
 public:
  Piecewise() = default;
  /// Throws ParameterError if segments are unordered, overlap, or leave gaps.
  explicit Piecewise(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  double lo() const { return segments_.front().lo; }
  double hi() const { return segments_.back().hi; }
  bool empty() const { return segments_.empty(); }

  /// Index of the segment used for the one-sided limit at x, if any.
  std::optional<std::size_t> locate(double x, Side side) const;

  /// Breakpoints including both domain ends, ascending.
  std::vector<double> knots() const;

  /// Smallest max_order over all segments.
  int max_order() const;

 private:
  std::vector<Segment> segments_;
};

/// Polynomial product of two ascending coefficient lists.
std::vector<double> poly_multiply(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace gabordual
