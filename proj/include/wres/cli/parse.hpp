#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wres/algebra/polynomial.hpp"

namespace wres {

// Grammar: integers or a/b rationals, + - * ^, parentheses, explicit '*'.
// Throws Error(ParseError) with a character offset, or Error(UnknownVariable).
Polynomial parsePolynomial(std::string_view text, const Ring& ring);

// Splits on ';' and parses each nonblank piece.
std::vector<Polynomial> parsePolynomialList(std::string_view text, const Ring& ring);

// Splits "x,y,z" into variable names.
std::vector<std::string> parseVariableList(std::string_view text);

} // namespace wres
