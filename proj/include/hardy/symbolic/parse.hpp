#pragma once

#include <string_view>

#include "hardy/symbolic/multipoly.hpp"

namespace hardy::sym {

/// Parses a polynomial over `vars`.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      division by constants only
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | identifier | '(' expr ')'
///
/// Numbers are integers, decimals or a/b rationals (via '/'). Throws
/// ParseError with the offending column on malformed input.
MultiPoly parse_polynomial(std::string_view text, const VarSet& vars);

}  // namespace hardy::sym
