#pragma once

// Text syntax shared by scalars, polynomials and fixtures:
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ['^' ['-'] integer]
//   atom  := integer | identifier | '(' expr ')'
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]* followed by optional primes and an
// optional "@k" tensor-factor tag. "i" is the imaginary unit. Generators in
// the supplied list shadow parameters of the same name. Division and negative
// powers are only allowed for invertible scalars.

#include <string_view>
#include <vector>

#include "qsuper/grassmann.hpp"
#include "qsuper/superpoly.hpp"

namespace qsuper {

GrassmannScalar parse_scalar(std::string_view text);
SuperPolynomial parse_superpoly(std::string_view text, const std::vector<GenId>& generators);

}  // namespace qsuper
