#include "gabordual/window.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"

namespace gabordual {

std::string to_string(const Smoothness& s) { return s ? std::to_string(*s) : std::string("inf"); }

PiecewiseWindow::PiecewiseWindow(std::string name, Piecewise pieces, Smoothness declared, int max_order)
    : name_(std::move(name)), pieces_(std::move(pieces)), declared_(declared),
      max_order_(std::min(max_order, pieces_.max_order())) {
  if (pieces_.empty()) throw ParameterError("window has no pieces");
  if (pieces_.lo() != -1.0 || pieces_.hi() != 1.0)
    throw ParameterError("window pieces must cover exactly [-1,1]");
  if (max_order_ < 0) throw ParameterError("window max_order must be non-negative");
  if (declared_ && *declared_ < 0) throw ParameterError("declared smoothness must be non-negative");
}

double PiecewiseWindow::eval_deriv_sided(int m, double x, Side side) const {
  if (m < 0 || m > max_order_) {
    std::ostringstream msg;
    msg << "window '" << name_ << "': derivative order " << m << " unsupported (max " << max_order_ << ")";
    throw UnsupportedOrderError(msg.str());
  }
  const auto idx = pieces_.locate(x, side);
  if (!idx) return 0.0;
  return pieces_.segments()[*idx].piece.deriv(m, x, side);
}

double eval_deriv(const PiecewiseWindow& w, int m, double x) { return w.eval_deriv(m, x); }

double eval_deriv_sided(const PiecewiseWindow& w, int m, double x, Side side) {
  return w.eval_deriv_sided(m, x, side);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"hann", "blackman", "b2spline", "bump_example"};
  return names;
}

namespace {

PiecewiseWindow make_hann() {
  // cos^2(pi x / 2) = 1/2 + 1/2 cos(pi x) on [-1,1]
  return PiecewiseWindow("hann", Piecewise({{-1.0, 1.0, Piece::trig(0.5, {0.5})}}), 1);
}

PiecewiseWindow make_blackman() {
  return PiecewiseWindow("blackman", Piecewise({{-1.0, 1.0, Piece::trig(0.42, {0.5, 0.08})}}), 1);
}

PiecewiseWindow make_b2spline() {
  // Expanded about the outer endpoints so that g(+-1) = 0 exactly.
  return PiecewiseWindow("b2spline",
                         Piecewise({{-1.0, 0.0, Piece::polynomial({0.0, 1.0}, -1.0)},
                                    {0.0, 1.0, Piece::polynomial({0.0, -1.0}, 1.0)}}),
                         0);
}

PiecewiseWindow make_bump_example() {
  // g = (1/16)(17 + 2x - x^2) beta(x), beta = p(|x|) on 4/5 <= |x| <= 1, 1 in between.
  // With s = x - 1, p(1 + s) = -1250 s^3 - 9375 s^4 - 18750 s^5 (integer coefficients,
  // exact in double), and 17 + 2x - x^2 = 18 - s^2.
  const std::vector<double> p_right{0.0, 0.0, 0.0, -1250.0, -9375.0, -18750.0};
  // With u = x + 1 on the left, p(-x) = p(1 - u) and 17 + 2x - x^2 = 14 + 4u - u^2.
  const std::vector<double> p_left{0.0, 0.0, 0.0, 1250.0, -9375.0, 18750.0};

  auto scaled = [](std::vector<double> c) {
    for (double& v : c) v /= 16.0;
    return c;
  };
  auto left = scaled(poly_multiply({14.0, 4.0, -1.0}, p_left));
  auto right = scaled(poly_multiply({18.0, 0.0, -1.0}, p_right));
  auto middle = scaled({17.0, 2.0, -1.0});

  return PiecewiseWindow("bump_example",
                         Piecewise({{-1.0, -0.8, Piece::polynomial(std::move(left), -1.0)},
                                    {-0.8, 0.8, Piece::polynomial(std::move(middle), 0.0)},
                                    {0.8, 1.0, Piece::polynomial(std::move(right), 1.0)}}),
                         2);
}

}  // namespace

PiecewiseWindow builtin(std::string_view name) {
  if (name == "hann") return make_hann();
  if (name == "blackman") return make_blackman();
  if (name == "b2spline") return make_b2spline();
  if (name == "bump_example") return make_bump_example();
  std::string msg = "unknown window '" + std::string(name) + "'; valid names:";
  for (const auto& n : builtin_names()) msg += " " + n;
  throw ParameterError(msg);
}

ValidationReport validate_window(const PiecewiseWindow& w, int n, int grid_size, double tol) {
  if (n < 0 || n > w.max_order())
    throw UnsupportedOrderError("validation order " + std::to_string(n) + " exceeds window max_order " +
                                std::to_string(w.max_order()));
  if (grid_size < 2) throw ParameterError("validation grid needs at least 2 points");

  ValidationReport rep;
  rep.order = n;
  rep.tol = tol;

  const auto& pw = w.pieces();
  rep.support_ok = pw.lo() == -1.0 && pw.hi() == 1.0;
  if (!rep.support_ok) rep.failures.push_back("pieces do not cover [-1,1]");

  rep.min_abs_interior = INFINITY;
  for (int i = 0; i < grid_size; ++i) {
    const double x = -1.0 + 2.0 * (i + 0.5) / grid_size;
    rep.min_abs_interior = std::min(rep.min_abs_interior, std::abs(w(x)));
  }
  rep.nonvanishing_ok = rep.min_abs_interior > tol;
  if (!rep.nonvanishing_ok) rep.failures.push_back("window vanishes inside (-1,1)");

  // Per-order magnitude scale so that tol is relative for large derivatives.
  std::vector<double> scale(static_cast<std::size_t>(n) + 1, 1.0);
  for (int m = 0; m <= n; ++m)
    for (int i = 0; i < 257; ++i) {
      const double x = -1.0 + 2.0 * (i + 0.5) / 257;
      scale[static_cast<std::size_t>(m)] = std::max(scale[static_cast<std::size_t>(m)], std::abs(w.eval_deriv(m, x)));
    }

  rep.knots_ok = true;
  rep.boundary_ok = true;
  const auto knots = w.knots();
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    for (int m = 0; m <= n; ++m) {
      const double l = w.eval_deriv_sided(m, knots[i], Side::Left);
      const double r = w.eval_deriv_sided(m, knots[i], Side::Right);
      const double diff = std::abs(l - r);
      rep.max_knot_mismatch = std::max(rep.max_knot_mismatch, diff);
      if (diff > tol * scale[static_cast<std::size_t>(m)]) {
        rep.knots_ok = false;
        std::ostringstream msg;
        msg << "derivative " << m << " jumps by " << format_real(diff) << " at knot " << format_real(knots[i]);
        rep.failures.push_back(msg.str());
      }
    }
  }

  for (int m = 0; m <= n; ++m) {
    const double at_left = w.eval_deriv_sided(m, -1.0, Side::Right);
    const double at_right = w.eval_deriv_sided(m, 1.0, Side::Left);
    for (auto [where, v] : {std::pair{-1.0, at_left}, std::pair{1.0, at_right}}) {
      rep.max_boundary_value = std::max(rep.max_boundary_value, std::abs(v));
      if (std::abs(v) > tol * scale[static_cast<std::size_t>(m)]) {
        rep.boundary_ok = false;
        std::ostringstream msg;
        msg << "derivative " << m << " is " << format_real(v) << " at x=" << format_real(where)
            << " (must vanish)";
        rep.failures.push_back(msg.str());
      }
    }
  }

  return rep;
}

bool is_even(const PiecewiseWindow& w, int grid_size, double tol) {
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) / grid_size;
    if (std::abs(w(x) - w(-x)) > tol) return false;
  }
  return true;
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Piecewise read_pieces(std::istream& in, Smoothness* smoothness) {
  std::vector<Segment> segs;
  Smoothness declared = 0;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (tok[0] == "smoothness") {
      if (tok.size() != 2) fail("expected 'smoothness <n|inf>'");
      if (tok[1] == "inf") {
        declared = std::nullopt;
      } else {
        try {
          declared = std::stoi(tok[1]);
        } catch (const std::exception&) {
          fail("bad smoothness '" + tok[1] + "'");
        }
      }
      continue;
    }
    if (tok.size() < 4) fail("expected 'l r kind coeffs...'");
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> c;
    try {
      lo = parse_real(tok[0]);
      hi = parse_real(tok[1]);
      for (std::size_t i = 3; i < tok.size(); ++i) c.push_back(parse_real(tok[i]));
    } catch (const ParseError& e) {
      fail(e.what());
    }
    const std::string& kind = tok[2];
    if (kind == "poly") {
      segs.push_back({lo, hi, Piece::polynomial(std::move(c))});
    } else if (kind.rfind("poly@", 0) == 0) {
      double origin = 0.0;
      try {
        origin = parse_real(kind.substr(5));
      } catch (const ParseError& e) {
        fail(e.what());
      }
      segs.push_back({lo, hi, Piece::polynomial(std::move(c), origin)});
    } else if (kind == "trigpoly") {
      std::vector<double> a;
      std::vector<double> b;
      for (std::size_t i = 1; i < c.size(); i += 2) {
        a.push_back(c[i]);
        b.push_back(i + 1 < c.size() ? c[i + 1] : 0.0);
      }
      segs.push_back({lo, hi, Piece::trig(c[0], std::move(a), std::move(b))});
    } else {
      fail("unknown piece kind '" + kind + "' (expected poly, poly@x0 or trigpoly)");
    }
  }
  if (smoothness) *smoothness = declared;
  try {
    return Piecewise(std::move(segs));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

void write_pieces(std::ostream& out, const Piecewise& pieces, const Smoothness* smoothness) {
  if (smoothness) out << "smoothness " << to_string(*smoothness) << '\n';
  for (const auto& s : pieces.segments()) {
    out << format_real(s.lo) << ' ' << format_real(s.hi);
    if (const auto* p = s.piece.as_polynomial()) {
      if (p->origin == 0.0) {
        out << " poly";
      } else {
        out << " poly@" << format_real(p->origin);
      }
      for (double c : p->coeffs) out << ' ' << format_real(c);
    } else if (const auto* t = s.piece.as_trig()) {
      out << " trigpoly " << format_real(t->a0);
      const std::size_t terms = std::max(t->cos_coeffs.size(), t->sin_coeffs.size());
      for (std::size_t i = 0; i < terms; ++i) {
        out << ' ' << format_real(i < t->cos_coeffs.size() ? t->cos_coeffs[i] : 0.0) << ' '
            << format_real(i < t->sin_coeffs.size() ? t->sin_coeffs[i] : 0.0);
      }
    } else {
      throw ParameterError("closure pieces cannot be written in piece format");
    }
    out << '\n';
  }
}

PiecewiseWindow read_window(std::istream& in, std::string name) {
  Smoothness declared = 0;
  auto pieces = read_pieces(in, &declared);
  try {
    return PiecewiseWindow(std::move(name), std::move(pieces), declared);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

PiecewiseWindow load_window_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open window file '" + path + "'");
  return read_window(in, path);
}

}  // namespace gabordual
