#pragma once

#include <string>

#include "tdcad/polynomial.hpp"

namespace tdcad {

// Polynomial text grammar (README has the full description):
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := rational | identifier | '(' poly ')'
//   rational := digits ['/' digits]
//
// Multiplication is always explicit; juxtaposition is a syntax error.
// Identifiers must be declared in the variable order.
Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& order,
                            int line_for_errors = 1);

}  // namespace tdcad
