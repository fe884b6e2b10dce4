#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "gabordual/periodization.hpp"
#include "gabordual/zfunction.hpp"

namespace gabordual {

struct Interval {
  double lo;
  double hi;
};

/// Largest integer k >= 0 with k < b/(1-b). Ratios within 1e-12 (relative)
/// of an integer count as that integer, so b = 1/2 gives 0.
int kmax(double b);

/// Closed support intervals of every dual built for b, sorted and merged.
std::vector<Interval> support_set(double b);

/// The points +-k/b and +-(k+1), k = 0..kmax, where the pieces of h meet.
std::vector<double> seam_points(double b);

/// Right-hand piece on [k/b, k+1] (k = 0 is the plain [0,1] branch); 0 outside.
double gamma_k(const Periodization& psi, const ZFunction& z, double b, int k, double x);
/// Left-hand piece on [-k-1, -k/b]; 0 outside.
double eta_k(const Periodization& psi, const ZFunction& z, double b, int k, double x);

/// Compactly supported dual window h assembled from (g, z, b), or an
/// arbitrary function wrapped with the same evaluation interface.
/// Cheap to copy; immutable.
class DualWindow {
 public:
  enum class PieceKind { Eta, Gamma, Closure };
  struct PieceInfo {
    Interval span;
    PieceKind kind;
    int k;
  };

  /// Wraps fn as a candidate dual supported on `support`. Values outside
  /// `support` are 0. `seams` are the points the smoothness probe visits.
  static DualWindow from_function(double b, std::vector<Interval> support, std::function<double(double)> fn,
                                  std::vector<double> seams = {});

  /// h(x). Arguments within 1e-13 of a seam snap onto it; on a closed seam
  /// shared by two pieces the left-most piece containing x wins, except
  /// h(0) = b psi(0) for constructed duals.
  double operator()(double x) const;
  /// One-sided limit at x from the pieces on `side` (0 if none).
  double eval_sided(double x, Side side) const;

  double b() const;
  int kmax() const;
  const std::vector<double>& seams() const;
  const std::vector<PieceInfo>& pieces() const;
  std::vector<Interval> support() const;
  std::optional<double> center_value() const;

  /// Set for duals produced by build_dual.
  bool is_constructed() const;
  const Periodization* periodization() const;
  const ZFunction* z() const;

 private:
  struct State;
  explicit DualWindow(std::shared_ptr<const State> s) : s_(std::move(s)) {}
  double eval_piece(const PieceInfo& p, double x) const;
  double snap(double x) const;

  std::shared_ptr<const State> s_;

  friend DualWindow build_dual(const PiecewiseWindow& g, const ZFunction& z, double b);
};

/// h_z for window g, parametrization z and modulation parameter b in (0,1).
DualWindow build_dual(const PiecewiseWindow& g, const ZFunction& z, double b);

/// b g / (g^2 + g(.-1)^2 + g(.+1)^2) on [-1,1]; requires b <= 1/2.
DualWindow canonical_painless_dual(const PiecewiseWindow& g, double b);

/// Rows "x<TAB>h(x)" for `count` equispaced points on [lo, hi], "%.17g", LF.
void write_samples_tsv(std::ostream& out, const std::function<double(double)>& f, double lo, double hi,
                       int count, bool header, const char* value_name = "h");

}  // namespace gabordual
