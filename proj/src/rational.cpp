#include "chorn/rational.hpp"

#include <stdexcept>

namespace chorn {

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

Integer binomial_uint(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) {
    return Rational(0);
  }
  // Fast path: non-negative integer argument.
  if (x.get_den() == 1 && x >= 0) {
    return Rational(binomial_uint(x.get_num().get_ui(), static_cast<unsigned long>(k)));
  }
  Rational result(1);
  for (long j = 0; j < k; ++j) {
    result *= x - j;
  }
  return result / Rational(factorial(static_cast<unsigned long>(k)));
}

Rational falling_factorial(const Rational& x, long k) {
  if (k < 0) {
    throw std::invalid_argument("falling_factorial: negative k");
  }
  Rational result(1);
  for (long j = 0; j < k; ++j) {
    result *= x - j;
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace chorn
