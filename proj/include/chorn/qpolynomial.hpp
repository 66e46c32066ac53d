#pragma once

#include <vector>

#include "chorn/rational.hpp"

namespace chorn {

// Univariate polynomial in the color-count variable q, exact rational
// coefficients, canonical form (no trailing zeros).
class QPolynomial {
 public:
  QPolynomial() = default;  // zero polynomial
  explicit QPolynomial(std::vector<Rational> coeffs);  // ascending powers
  static QPolynomial constant(const Rational& c);
  static QPolynomial variable();  // q

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& q) const;

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;
  QPolynomial operator*(const Rational& scalar) const;
  QPolynomial operator/(const Rational& scalar) const;
  bool operator==(const QPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }
  bool operator!=(const QPolynomial& other) const { return !(*this == other); }

  // Exact long division; throws std::domain_error if the remainder is
  // nonzero or the divisor is zero.
  QPolynomial divide_exact(const QPolynomial& divisor) const;

 private:
  std::vector<Rational> coeffs_;
};

// binom(q, k) as a degree-k polynomial; the zero polynomial for k < 0.
QPolynomial binomial_poly(long k);
// Falling factorial (q)_k = q(q-1)...(q-k+1).
QPolynomial falling_factorial_poly(long k);
// v_k(q) = binom(q, k) - binom(q, k-1).
QPolynomial vk_poly(long k);

// Unique polynomial of degree <= d through the samples, exact. Requires
// >= d+1 distinct nodes; inconsistent over-determined samples are rejected
// (std::domain_error), distinguishing them from fitting error upstream.
QPolynomial interpolate_q(const std::vector<std::pair<Rational, Rational>>& samples,
                          int degree);

}  // namespace chorn
