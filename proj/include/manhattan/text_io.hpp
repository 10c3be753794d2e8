#pragma once

#include <string>
#include <string_view>

#include "manhattan/errors.hpp"
#include "manhattan/skyline.hpp"

namespace manhattan {

// Skyline text format: whitespace- or comma-separated non-negative decimal
// integers; '#' starts a comment running to end of line. Throws ParseError
// with the offending position on anything else.
Skyline parse_skyline(std::string_view text);

// Space-separated heights followed by a newline; empty skylines format as an
// empty line. parse_skyline(format_skyline(sk)) == sk.
std::string format_skyline(const Skyline& sk);

}  // namespace manhattan
