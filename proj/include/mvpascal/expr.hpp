#pragma once

#include <string>

#include "mvpascal/series.hpp"

namespace mvpascal {

/// Evaluates a rational expression in z1, ..., z<nvars> as a series
/// truncated at `cap`. Grammar, with '^' binding tightest and taking a
/// non-negative integer literal exponent:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ('^' nat)?
///   base   := nat | var | '(' expr ')' | '-' base
///   var    := 'z' nat
///
/// Division requires a unit denominator (throws NonUnitError otherwise).
/// Malformed input throws ParseError carrying the offending position.
TruncatedSeries parse_rational_expr(const std::string& text, int nvars, int cap);

}  // namespace mvpascal
