#pragma once

#include <string>
#include <string_view>

namespace gabordual {

/// Round-trip formatting: 17 significant digits, "%.17g".
std::string format_real(double v);

/// Parses a decimal literal or an exact ratio "p/q". Throws ParseError.
double parse_real(std::string_view text);

}  // namespace gabordual
