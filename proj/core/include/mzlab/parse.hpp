#pragma once

// Text syntax for scalars, polynomials and monomial orders.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' int] | 'z' ['^' int] | 'x' index ['^' nonneg-int] | '(' expr ')'
//
// Whitespace may appear between tokens. There is no implicit multiplication, so
// "x1x2" is rejected. `z` denotes zeta_m and is an error over Q.

#include "mzlab/field.hpp"
#include "mzlab/polynomial.hpp"

#include <string_view>
#include <vector>

namespace mzlab {

/// Throws ParseError with the 0-based offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// The same grammar without variables.
Scalar parse_scalar(std::string_view text, Field field);

/// Comma-separated scalars, e.g. "1,-1/2,z". Parentheses protect inner commas.
std::vector<Scalar> parse_scalar_list(std::string_view text, Field field);

/// Comma-separated non-negative integers, e.g. "2,0,1".
MultiIndex parse_multiindex(std::string_view text, std::size_t n);

/// "lex", "grlex", or with an explicit 1-based priority: "lex:3,1,2", "grlex:312".
MonomialOrder parse_order(std::string_view text, std::size_t n);

}  // namespace mzlab
