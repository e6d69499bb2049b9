#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quatsurf {

// GMP keeps every arithmetic result canonical (lowest terms, positive
// denominator), so structural equality is value equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'), canonicalizing the result.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Fixed-point decimal with `digits` fractional digits, rounded half away
/// from zero. Exact up to the final rounding step.
std::string to_decimal(const Rational& r, int digits);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace quatsurf
