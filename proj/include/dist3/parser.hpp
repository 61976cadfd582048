#pragma once

#include <string>

#include "dist3/polynomial.hpp"

namespace dist3 {

// Parses the textual polynomial grammar over x0..x3 with exact rational
// coefficients:
//
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" natural)?
//   atom     := rational | variable | "(" expr ")"
//   variable := "x0" | "x1" | "x2" | "x3"
//   rational := natural ("/" positive-natural)?
//
// Whitespace is insignificant; implicit multiplication is rejected. A
// leading sign is accepted so that printing and parsing round-trip. Throws
// ParseError with the offending position.
QQPoly parse_polynomial(const std::string& text);

}  // namespace dist3
