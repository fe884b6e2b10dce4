#include "gabordual/zfunction.hpp"

#include <cmath>
#include <fstream>

#include "gabordual/error.hpp"
#include "gabordual/text_format.hpp"
#include "gabordual/window.hpp"

namespace gabordual {

namespace {

constexpr double kDomainSlack = 1e-13;

double clamp_unit(double x) {
  if (x >= 0.0 && x <= 1.0) return x;
  if (x < 0.0 && x >= -kDomainSlack) return 0.0;
  if (x > 1.0 && x <= 1.0 + kDomainSlack) return 1.0;
  throw ParameterError("z evaluated outside [0,1] at x=" + format_real(x));
}

}  // namespace

ZFunction::ZFunction(Piecewise pieces, std::string description)
    : pieces_(std::move(pieces)), description_(std::move(description)) {
  if (pieces_.empty() || pieces_.lo() != 0.0 || pieces_.hi() != 1.0)
    throw ParameterError("z pieces must cover exactly [0,1]");
}

double ZFunction::deriv(int m, double x) const {
  x = clamp_unit(x);
  const auto& segs = pieces_.segments();
  const auto idx = x == 1.0 ? std::optional<std::size_t>(segs.size() - 1) : pieces_.locate(x, Side::Right);
  return segs[*idx].piece.deriv(m, x, Side::Right);
}

double ZFunction::deriv_sided(int m, double x, Side side) const {
  x = clamp_unit(x);
  const auto& segs = pieces_.segments();
  if (x == 0.0) return segs.front().piece.deriv(m, x, Side::Right);
  if (x == 1.0) return segs.back().piece.deriv(m, x, Side::Left);
  return segs[*pieces_.locate(x, side)].piece.deriv(m, x, side);
}

ZFunction ZFunction::shifted(double c) const {
  std::vector<Segment> segs;
  for (const auto& s : pieces_.segments()) segs.push_back({s.lo, s.hi, s.piece.affine(1.0, c)});
  return ZFunction(Piecewise(std::move(segs)), description_ + " + " + format_real(c));
}

void write_z(std::ostream& out, const ZFunction& z) { write_pieces(out, z.pieces()); }

ZFunction read_z(std::istream& in, std::string description) {
  auto pieces = read_pieces(in);
  try {
    return ZFunction(std::move(pieces), std::move(description));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

ZFunction load_z_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open z file '" + path + "'");
  return read_z(in, "file:" + path);
}

}  // namespace gabordual
