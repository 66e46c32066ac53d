#include "chorn/qpolynomial.hpp"

#include <stdexcept>

namespace chorn {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

QPolynomial::QPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

QPolynomial QPolynomial::constant(const Rational& c) {
  return QPolynomial({c});
}

QPolynomial QPolynomial::variable() {
  return QPolynomial({Rational(0), Rational(1)});
}

Rational QPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational QPolynomial::leading() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_.back();
}

Rational QPolynomial::eval(const Rational& q) const {
  Rational result(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * q + *it;
  }
  return result;
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return QPolynomial();
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1,
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= scalar;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator/(const Rational& scalar) const {
  if (scalar == 0) throw std::domain_error("division by zero scalar");
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x /= scalar;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) {
    if (is_zero()) return QPolynomial();
    throw std::domain_error("polynomial division leaves a remainder");
  }
  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Rational factor = rem[i + d.size() - 1] / d.back();
    quot[i] = factor;
    if (factor == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) {
      rem[i + j] -= factor * d[j];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
  }
  return QPolynomial(std::move(quot));
}

QPolynomial binomial_poly(long k) {
  if (k < 0) return QPolynomial();
  return falling_factorial_poly(k) /
         Rational(factorial(static_cast<unsigned long>(k)));
}

QPolynomial falling_factorial_poly(long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial_poly: negative k");
  QPolynomial result = QPolynomial::constant(Rational(1));
  QPolynomial q = QPolynomial::variable();
  for (long j = 0; j < k; ++j) {
    result = result * (q - QPolynomial::constant(Rational(j)));
  }
  return result;
}

QPolynomial vk_poly(long k) {
  return binomial_poly(k) - binomial_poly(k - 1);
}

QPolynomial interpolate_q(
    const std::vector<std::pair<Rational, Rational>>& samples, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (samples.size() < static_cast<size_t>(degree) + 1) {
    throw std::invalid_argument("need at least degree+1 samples");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].first == samples[j].first) {
        throw std::invalid_argument("duplicate interpolation node");
      }
    }
  }
  // Lagrange on the first degree+1 nodes.
  QPolynomial result;
  for (size_t i = 0; i <= static_cast<size_t>(degree); ++i) {
    QPolynomial basis = QPolynomial::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j <= static_cast<size_t>(degree); ++j) {
      if (j == i) continue;
      basis = basis * (QPolynomial::variable() -
                       QPolynomial::constant(samples[j].first));
      denom *= samples[i].first - samples[j].first;
    }
    result = result + basis * (samples[i].second / denom);
  }
  // Over-determined samples must be consistent; a mismatch signals an
  // upstream bug, not a fitting problem.
  for (const auto& [x, y] : samples) {
    if (result.eval(x) != y) {
      throw std::domain_error("inconsistent over-determined samples");
    }
  }
  return result;
}

}  // namespace chorn
