#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gabordual/dual_window.hpp"
#include "gabordual/window.hpp"
#include "gabordual/zfunction.hpp"

namespace gabordual {

// Finite differences

/// Fornberg weights w[i] for the m-th derivative at z from the given nodes.
std::vector<double> fd_weights(double z, const std::vector<double>& nodes, int m);

/// m-th one-sided derivative at p from samples f(p +- i*step), i = 1..m+3,
/// plus the one-sided value fp at p itself, Richardson-extrapolated over
/// step and step/2.
double one_sided_derivative(const std::function<double(double)>& f, double fp, double p, int m, Side side,
                            double step);

/// one_sided_derivative over steps max_step, max_step/2, ... down to
/// min_step; returns the estimate that agrees best with its predecessor.
double adaptive_one_sided_derivative(const std::function<double(double)>& f, double fp, double p, int m, Side side,
                                     double max_step, double min_step);

// Checks

/// max over x_i = (i + 0.5)/grid of |sum_n g(x + k/b + n) h(x + n) - delta_{k0} b|.
double duality_residual(const PiecewiseWindow& g, const DualWindow& h, double b, int k, int grid);

struct SeamJump {
  double point;
  int order;
  double left;
  double right;
  double jump() const;
};

/// One-sided FD estimates of h^(m)(p-) and h^(m)(p+) for m = 0..n (n <= 6).
std::vector<SeamJump> seam_jump_probe(const DualWindow& h, int n, const std::vector<double>& points);

/// Knots of g where g^(order) jumps, with the jump right - left.
std::vector<std::pair<double, double>> derivative_jumps(const PiecewiseWindow& g, int order, double tol = 1e-9);

/// sum over jump knots x_s of g^(n+1) with x_s - x_r integer of jump(x_s) h(x_s).
double obstruction_jump_sum(const PiecewiseWindow& g, const DualWindow& h, int n, double x_r);

struct FrameBounds {
  double lower;
  double upper;
};

/// min and max of (g^2 + g(.-1)^2 + g(.+1)^2) / b over x_i = i/grid; b <= 1/2.
FrameBounds frame_bounds_painless(const PiecewiseWindow& g, double b, int grid);

// Reconstruction

struct TestSignal {
  std::string name;
  Interval support;
  std::function<double(double)> f;
};

/// gaussian, bump, chirp, zero. Throws ParameterError for other names.
TestSignal test_signal(std::string_view name);
const std::vector<std::string>& test_signal_names();

struct GaborGridParams {
  double b = 0.0;
  int M = 1;               // modulations |m| <= M
  int K = 1;               // shifts |k| <= K
  int nodes_per_unit = 0;  // Gauss-Legendre nodes per unit interval; 0 picks from b*M
  int eval_grid = 4096;
};

/// Relative L2 error of f against its truncated expansion
/// sum <f, M_{bm} T_k g> M_{bm} T_k h.
double reconstruct(const TestSignal& f, const PiecewiseWindow& g, const DualWindow& h, const GaborGridParams& p);

// Bundled report

struct ReportOptions {
  int duality_grid = 4096;
  double duality_tol = 1e-9;
  double seam_tol = 1e-6;
  int support_grid = 20000;
  double support_tol = 1e-11;
  int symmetry_grid = 4096;
  double symmetry_tol = 1e-11;
};

struct VerificationReport {
  double b = 0.0;
  int kmax = 0;
  int n = 0;
  ReportOptions opts;
  std::map<int, double> duality_residuals;
  std::vector<SeamJump> seam_jumps;
  double support_leak = 0.0;
  bool symmetry_expected = false;
  double symmetry_defect = 0.0;
  double sup_abs = 0.0;

  double max_duality_residual() const;
  double max_seam_jump() const;
  bool duality_pass() const;
  bool seam_pass() const;
  bool support_pass() const;
  bool symmetry_pass() const;
  bool bounded_pass() const;
  bool pass() const;

  /// One "check.subkey = value" line per entry, 17 significant digits.
  std::string to_text() const;
};

VerificationReport verify_dual(const PiecewiseWindow& g, const DualWindow& h, int n, bool expect_symmetric,
                               const ReportOptions& opts = {});
VerificationReport full_report(const PiecewiseWindow& g, const ZFunction& z, double b, int n,
                               const ReportOptions& opts = {});

/// True if z(x) = -z(1 - x) on a grid within tol.
bool is_antisymmetric(const ZFunction& z, int grid = 1024, double tol = 1e-11);

/// sup |h| on a half-offset grid over [lo, hi] restricted to points outside `allowed`.
double max_abs_outside(const DualWindow& h, const std::vector<Interval>& allowed, double lo, double hi, int grid);

}  // namespace gabordual
