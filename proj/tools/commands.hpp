#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gabordual/window.hpp"
#include "gabordual/zfunction.hpp"

namespace gabordual::cli {

struct RunConfig {
  std::string window = "hann";
  std::string b_text;
  std::optional<int> n;
  std::string z = "standard";
  int grid = 2049;
  std::string out_dir = ".";
  bool header = false;
};

struct ReconstructConfig {
  std::string signal = "gaussian";
  int K = 6;
  std::vector<int> Ms{8, 16, 32, 64};
};

/// Decimal, "p/q" or "p/(q*pi)"; result must lie in (0,1).
double parse_b(std::string_view text);

/// Built-in name or path to a piece file; the window must pass order-0 validation.
PiecewiseWindow resolve_window(const std::string& spec);

/// --n if given, else the declared smoothness (2 for C^infinity), capped at max_order.
int effective_order(const RunConfig& cfg, const PiecewiseWindow& g);

/// standard | minpoly | smallsupport:N[:hermite|antisym|antisymmetric-trig] | file:path
ZFunction resolve_z(const std::string& strategy, const PiecewiseWindow& g, double b, int n);

// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const RunConfig& cfg, const ReconstructConfig& rc, bool write_file, std::ostream& out,
                    std::ostream& err);
int cmd_windows_list(std::ostream& out);

/// Full command-line entry point (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gabordual::cli
