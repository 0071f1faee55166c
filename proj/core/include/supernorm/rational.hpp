#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supernorm {

// GMP-backed arbitrary precision values. mpq_class keeps every result of
// arithmetic in lowest terms with a positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

// "numerator/denominator", or just the numerator when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "a/b", "a" or "-a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Nearest double (ties to even). mpq_get_d truncates, which would make
// backend comparisons depend on the sign of the rounding error.
double to_double(const Rational& q);

// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace supernorm
