#pragma once

#include <gmpxx.h>

#include <string>

namespace mvpascal {

// Exact coefficient types. Every computation in this library is exact;
// there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k) as an exact integer; 0 for k > n.
Int binomial(unsigned long n, unsigned long k);

/// n! as an exact integer.
Int factorial(unsigned long n);

/// base^exp as an exact integer; base may be negative, exp >= 0.
Int int_pow(long base, unsigned long exp);

/// num/den in lowest terms; den must be nonzero. mpq_class construction
/// alone does not canonicalize, this does.
Rat make_rat(const Int& num, const Int& den);

/// Parses "a" or "a/b" with optional leading '-'. Throws ParseError on
/// malformed input or zero denominator. The result is canonical.
Rat rat_from_string(const std::string& s);

/// Decimal string, e.g. "-42".
std::string to_string(const Int& z);

/// "n" when the denominator is 1, otherwise "n/d" in lowest terms.
std::string to_string(const Rat& q);

}  // namespace mvpascal
