#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p1gw {

using BigInt = mpz_class;

/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

/// num / den in lowest terms. Constructing mpq_class from two integers does
/// not reduce, and GMP arithmetic assumes reduced operands.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(int n);

/// Binomial coefficient with the out-of-range convention C(n, k) = 0 for
/// k < 0 or k > n.
BigInt binomial(int n, int k);

/// r^e for any integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, int e);
BigInt pow(const BigInt& b, unsigned e);

/// "p/q", or "p" when q == 1. The sign lives on the numerator.
std::string to_string(const Rational& r);

/// Inverse of to_string. Rejects anything that is not an optionally signed
/// integer or fraction with nonzero denominator; non-canonical input such as
/// "2/4" is accepted and normalized.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits in scientific notation.
/// Display only; never used for comparisons.
std::string to_decimal(const Rational& r, int digits = 12);

}  // namespace p1gw
