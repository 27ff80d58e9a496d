#pragma once

#include <string_view>

#include "ppk/ratexpr.hpp"

namespace ppk {

/// Parses an expression over the declared variables.
///
/// Grammar (no juxtaposition; `^` takes a nonnegative integer literal):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)*
///   primary := INTEGER | IDENT | '(' expr ')'
///
/// Throws ParseError (with a 0-based position) on syntax errors and undeclared
/// identifiers, DivisionByZero when dividing by the zero polynomial.
RatExpr parse(std::string_view text, const Vars& vars);

/// Parses a single rational literal such as `-3/4` or `2`.
Rational parse_rational(std::string_view text);

}  // namespace ppk
