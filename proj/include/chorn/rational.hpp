#pragma once

#include <gmpxx.h>

#include <string>

namespace chorn {

// All coefficient arithmetic is exact. Rationals are always stored reduced
// (mpq_class canonicalizes on construction from integers; we canonicalize
// explicitly after raw numerator/denominator assembly).
using Rational = mpq_class;
using Integer = mpz_class;

// Serializes as "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input or
// zero denominator.
Rational parse_rational(const std::string& s);

// binom(n, k) for non-negative integers.
Integer binomial_uint(unsigned long n, unsigned long k);

// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for arbitrary rational
// x; zero for k < 0.
Rational binomial(const Rational& x, long k);

// Falling factorial x(x-1)...(x-k+1); requires k >= 0.
Rational falling_factorial(const Rational& x, long k);

Integer factorial(unsigned long n);

}  // namespace chorn
