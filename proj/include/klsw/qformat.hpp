#pragma once

#include "klsw/ratfn.hpp"

#include <string>

namespace klsw {

/// Parses expressions over quantum integers into exact values, accepting the
/// notation used in printed tables: "[2]^2/([3][4])", "2[4]+3[2]",
/// "-1/([2][4])", "[2]^3[5]([3]-3)", "u^-2+1", "1/2". Juxtaposition
/// multiplies; '^' binds tightest; '/' and implicit products bind tighter
/// than '+'/'-'. Throws std::invalid_argument on malformed input.
RatFn parse_qexpr(const std::string& text);

}  // namespace klsw
