#pragma once

#include "dicrit/algebra/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dicrit::algebra {

/// Parses an infix polynomial such as "y^2 - x^3" or "(x+2*y)^2 - 3/4*x".
/// Supports + - * ^, parentheses, integer and a/b literals and the given
/// variable names. Juxtaposition of a number and a variable ("2x") is accepted.
/// Throws ParseError("expression", ...) on malformed input.
Polynomial parse_expression(std::string_view text, const FieldPtr& field, const std::vector<std::string>& names);

}  // namespace dicrit::algebra
