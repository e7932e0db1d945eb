#pragma once

#include "oreext/algebra.hpp"
#include "oreext/base_poly.hpp"
#include "oreext/ore_poly.hpp"

#include <string_view>

namespace oreext {

// Grammar (whitespace ignored):
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | atom ('^' uint)?
//   atom     := rational | 'y' | 'x' | '(' expr ')'
//   rational := uint ('/' uint)?
// Errors carry the byte offset of the offending token.

BasePoly parse_base(std::string_view text);
OrePoly parse_operator(std::string_view text, const AlgebraPtr& algebra);

} // namespace oreext
