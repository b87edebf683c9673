#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace perron {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Accepts "p/q", integers and plain decimals ("-0.125", "3.5e-2").
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& q);

/// Decimal rendering with the given number of significant digits. Values
/// whose magnitude leaves [1e-4, 1e15) come out in scientific notation.
std::string to_decimal_string(const Rational& q, int significant_digits = 15);

/// log10|q| without overflow; -inf for zero.
double log10_abs(const Rational& q);

double to_double(const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_int(const BigInt& base, unsigned long exponent);
Rational pow_rational(const Rational& base, long exponent);

}  // namespace perron
