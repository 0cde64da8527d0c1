#pragma once

#include "vbf/multipoly.hpp"

#include <string_view>

namespace vbf {

// Parses a polynomial from the little oracle grammar: integer and p/q
// rational literals, variables x1..x9 and y1..y9, operators + - * ^ and
// parentheses. The context is built from the variables that occur, sorted
// by name. Throws std::invalid_argument with a position hint on bad input.
MultiPoly parse_polynomial(std::string_view text);

}  // namespace vbf
