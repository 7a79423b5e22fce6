#pragma once

#include <gmpxx.h>

#include <string>

namespace mellin {

/// Arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational rational_pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned k);

/// k-th power of -1 for any integer k.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace mellin
