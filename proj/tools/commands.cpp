#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <regex>

#include "gabordual/dual_window.hpp"
#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"
#include "gabordual/verify.hpp"
#include "gabordual/zgen.hpp"

namespace gabordual::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kDefaultInfiniteOrder = 2;

std::ofstream open_output(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  const auto path = fs::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + path.string() + "'");
  return f;
}

struct Built {
  PiecewiseWindow g;
  double b;
  int n;
  ZFunction z;
  DualWindow h;
};

Built build_from(const RunConfig& cfg) {
  if (cfg.grid < 64) throw ParameterError("grid must be at least 64");
  auto g = resolve_window(cfg.window);
  const double b = parse_b(cfg.b_text);
  const int n = effective_order(cfg, g);
  auto z = resolve_z(cfg.z, g, b, n);
  auto h = build_dual(g, z, b);
  return {std::move(g), b, n, std::move(z), std::move(h)};
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

double parse_b(std::string_view text) {
  static const std::regex over_pi(R"(^\s*([0-9.eE+-]+)\s*/\s*\(\s*([0-9.eE+-]+)\s*\*\s*pi\s*\)\s*$)");
  const std::string s(text);
  double b = 0.0;
  std::smatch m;
  if (std::regex_match(s, m, over_pi)) {
    const double p = parse_real(m[1].str());
    const double q = parse_real(m[2].str());
    if (q == 0.0) throw ParseError("zero denominator in b = '" + s + "'");
    b = p / (q * std::numbers::pi);
  } else {
    b = parse_real(s);
  }
  if (!(b > 0.0 && b < 1.0)) throw ParameterError("b must lie in (0,1), got '" + s + "'");
  return b;
}

PiecewiseWindow resolve_window(const std::string& spec) {
  const auto& names = builtin_names();
  auto g = std::find(names.begin(), names.end(), spec) != names.end() ? builtin(spec) : load_window_file(spec);
  const auto v = validate_window(g, 0);
  if (!v.pass()) {
    std::string msg = "window '" + spec + "' is not a continuous window on [-1,1] nonvanishing inside:";
    for (const auto& f : v.failures) msg += " " + f + ";";
    throw ParameterError(msg);
  }
  return g;
}

int effective_order(const RunConfig& cfg, const PiecewiseWindow& g) {
  int n = cfg.n ? *cfg.n : g.declared_smoothness().value_or(kDefaultInfiniteOrder);
  if (n < 0) throw ParameterError("--n must be non-negative");
  return std::min(n, g.max_order());
}

ZFunction resolve_z(const std::string& strategy, const PiecewiseWindow& g, double b, int n) {
  if (strategy == "standard") return z_standard(g, b);
  if (strategy == "minpoly") return z_min_poly(g, b, n);
  if (strategy.rfind("file:", 0) == 0) return load_z_file(strategy.substr(5));
  static const std::regex small(R"(^smallsupport:([0-9]+)(?::([a-z-]+))?$)");
  std::smatch m;
  if (std::regex_match(strategy, m, small)) {
    const int N = std::stoi(m[1].str());
    const std::string mid = m[2].matched ? m[2].str() : "hermite";
    MidJoiner joiner;
    if (mid == "hermite") {
      joiner = MidJoiner::Hermite;
    } else if (mid == "antisym" || mid == "antisymmetric-trig") {
      joiner = MidJoiner::AntisymmetricTrig;
    } else {
      throw ParseError("unknown middle joiner '" + mid + "' (hermite, antisym)");
    }
    return z_small_support(g, b, N, n, joiner);
  }
  throw ParseError("unknown z strategy '" + strategy +
                   "' (standard, minpoly, smallsupport:N[:hermite|antisym], file:path)");
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bt = build_from(cfg);
    const auto& h = bt.h;
    const double reach = h.kmax() + 1.0;
    {
      auto f = open_output(cfg.out_dir, "h.tsv");
      write_samples_tsv(f, [&h](double x) { return h(x); }, -reach, reach, cfg.grid, cfg.header, "h");
    }
    {
      auto f = open_output(cfg.out_dir, "z.tsv");
      write_samples_tsv(f, [&bt](double x) { return bt.z(x); }, 0.0, 1.0, cfg.grid, cfg.header, "z");
    }
    {
      auto f = open_output(cfg.out_dir, "support.txt");
      for (const auto& iv : support_set(bt.b)) f << format_real(iv.lo) << '\t' << format_real(iv.hi) << '\n';
    }
    // Extent of the sampled nonzero values, which can be smaller than the structural support.
    double lo = reach;
    double hi = -reach;
    for (int i = 0; i < cfg.grid; ++i) {
      const double x = -reach + 2.0 * reach * i / (cfg.grid - 1);
      if (std::abs(h(x)) > 1e-11) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
    {
      auto f = open_output(cfg.out_dir, "meta.txt");
      f << "window = " << bt.g.name() << '\n';
      f << "b = " << format_real(bt.b) << '\n';
      f << "b_input = " << cfg.b_text << '\n';
      f << "kmax = " << h.kmax() << '\n';
      f << "n = " << bt.n << '\n';
      f << "z = " << bt.z.description() << '\n';
      f << "grid = " << cfg.grid << '\n';
      f << "h0 = " << format_real(h(0.0)) << '\n';
      if (lo <= hi) f << "sampled_support = " << format_real(lo) << '\t' << format_real(hi) << '\n';
    }
    out << "wrote h.tsv, z.tsv, support.txt, meta.txt to " << cfg.out_dir << '\n';
    return 0;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bt = build_from(cfg);
    const auto report = verify_dual(bt.g, bt.h, bt.n, is_even(bt.g) && is_antisymmetric(bt.z));
    {
      auto f = open_output(cfg.out_dir, "report.txt");
      f << report.to_text();
    }
    out << "duality: " << (report.duality_pass() ? "pass" : "FAIL") << " (max residual "
        << format_real(report.max_duality_residual()) << ")\n";
    const SeamJump* worst = nullptr;
    for (const auto& s : report.seam_jumps)
      if (!worst || s.jump() > worst->jump()) worst = &s;
    out << "smoothness: " << (report.seam_pass() ? "pass" : "FAIL");
    if (worst)
      out << " (max jump " << format_real(worst->jump()) << " at seam " << format_real(worst->point) << " order "
          << worst->order << ")";
    out << '\n';
    for (const auto& s : report.seam_jumps) {
      if (s.jump() >= report.opts.seam_tol)
        out << "  failed: seam " << format_real(s.point) << " order " << s.order << " jump " << format_real(s.jump())
            << '\n';
    }
    out << "support: " << (report.support_pass() ? "pass" : "FAIL") << " (leak " << format_real(report.support_leak)
        << ")\n";
    out << "symmetry: " << (report.symmetry_expected ? (report.symmetry_pass() ? "pass" : "FAIL") : "not expected")
        << " (defect " << format_real(report.symmetry_defect) << ")\n";
    out << "bounded: " << (report.bounded_pass() ? "pass" : "FAIL") << " (sup " << format_real(report.sup_abs)
        << ")\n";
    return report.pass() ? 0 : 1;
  });
}

int cmd_reconstruct(const RunConfig& cfg, const ReconstructConfig& rc, bool write_file, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const auto bt = build_from(cfg);
    const auto signal = test_signal(rc.signal);
    std::ostringstream table;
    if (cfg.header) table << "M\trelative_l2_error\n";
    for (int M : rc.Ms) {
      GaborGridParams p;
      p.b = bt.b;
      p.M = M;
      p.K = rc.K;
      table << M << '\t' << format_real(reconstruct(signal, bt.g, bt.h, p)) << '\n';
    }
    if (write_file) {
      auto f = open_output(cfg.out_dir, "reconstruct.tsv");
      f << table.str();
    }
    out << table.str();
    return 0;
  });
}

int cmd_windows_list(std::ostream& out) {
  for (const auto& name : builtin_names()) {
    const auto g = builtin(name);
    out << name << "\tC^" << to_string(g.declared_smoothness()) << '\n';
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compactly supported dual windows for Gabor frames"};
  app.require_subcommand(1);

  RunConfig cfg;
  ReconstructConfig rc;
  std::string out_for_reconstruct;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--window", cfg.window, "built-in window name or piece file")->capture_default_str();
    sub->add_option("--b", cfg.b_text, "modulation parameter: decimal, p/q or p/(q*pi)")->required();
    sub->add_option("--n", cfg.n, "smoothness order (default: declared smoothness of the window)");
    sub->add_option("--z", cfg.z, "standard | minpoly | smallsupport:N[:hermite|antisym] | file:path")
        ->capture_default_str();
    sub->add_option("--grid", cfg.grid, "number of samples in TSV output")->capture_default_str();
    sub->add_flag("--header", cfg.header, "add a header row to TSV output");
  };

  auto* build = app.add_subcommand("build", "construct a dual window and write samples");
  add_common(build);
  build->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "construct a dual window and run all checks");
  add_common(verify);
  verify->add_option("--out", cfg.out_dir, "output directory for report.txt")->capture_default_str();

  auto* recon = app.add_subcommand("reconstruct", "analysis/synthesis error of a test signal");
  add_common(recon);
  recon->add_option("--signal", rc.signal, "gaussian | bump | chirp")->capture_default_str();
  recon->add_option("--K", rc.K, "shift truncation |k| <= K")->capture_default_str();
  recon->add_option("--M", rc.Ms, "modulation truncations |m| <= M")->capture_default_str();
  recon->add_option("--out", out_for_reconstruct, "also write reconstruct.tsv to this directory");

  auto* windows = app.add_subcommand("windows", "built-in windows");
  windows->require_subcommand(1);
  auto* list = windows->add_subcommand("list", "list built-in windows");

  std::vector<std::string> argv_store{"gabordual"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (*build) return cmd_build(cfg, out, err);
  if (*verify) return cmd_verify(cfg, out, err);
  if (*recon) {
    if (!out_for_reconstruct.empty()) cfg.out_dir = out_for_reconstruct;
    return cmd_reconstruct(cfg, rc, !out_for_reconstruct.empty(), out, err);
  }
  if (*list) return cmd_windows_list(out);
  return 2;
}

}  // namespace gabordual::cli
