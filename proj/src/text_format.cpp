#include "gabordual/text_format.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "gabordual/error.hpp"

namespace gabordual {

namespace {

bool parse_plain(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  if (parse_plain(text, value)) return value;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    double num = 0.0;
    double den = 0.0;
    if (parse_plain(text.substr(0, slash), num) && parse_plain(text.substr(slash + 1), den)) {
      if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return num / den;
    }
  }
  throw ParseError("not a number: '" + std::string(text) + "'");
}

}  // namespace gabordual
