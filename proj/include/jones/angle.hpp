#pragma once

#include <string>

namespace jones {

// Parses an angle given as decimal radians or a pi fraction: "0.4", "pi",
// "pi/6", "2pi/3", "-pi/4", "0.5pi". Lets interval endpoints like pi/6 be
// written exactly. Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text);

} // namespace jones
