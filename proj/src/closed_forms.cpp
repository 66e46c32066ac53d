#include "chorn/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chorn {

std::vector<Integer> a_vector(const Graph& g, const PEOrdering& peo,
                              const ExponentVector& m) {
  std::map<int, int> rank;
  for (size_t i = 0; i < peo.order.size(); ++i) {
    rank[peo.order[i]] = static_cast<int>(i);
  }
  std::vector<int> supp = m.support();
  for (int v : supp) {
    if (!rank.count(v)) {
      throw std::invalid_argument("supp(m) contains vertex " +
                                  std::to_string(v) + " outside the ordering");
    }
  }
  std::sort(supp.begin(), supp.end(),
            [&](int a, int b) { return rank[a] < rank[b]; });
  std::vector<Integer> result;
  result.reserve(supp.size());
  for (size_t r = 0; r < supp.size(); ++r) {
    Integer a(m.get(supp[r]));
    for (size_t s = 0; s < r; ++s) {
      if (g.has_edge(supp[s], supp[r])) a += m.get(supp[s]);
    }
    result.push_back(std::move(a));
  }
  return result;
}

Rational peo_coefficient(const Graph& g, const PEOrdering& peo,
                         const ExponentVector& m, const Rational& q) {
  std::map<int, int> rank;
  for (size_t i = 0; i < peo.order.size(); ++i) {
    rank[peo.order[i]] = static_cast<int>(i);
  }
  std::vector<int> supp = m.support();
  std::sort(supp.begin(), supp.end(),
            [&](int a, int b) { return rank.at(a) < rank.at(b); });
  std::vector<Integer> a = a_vector(g, peo, m);
  Rational result(1);
  for (size_t r = 0; r < supp.size(); ++r) {
    result *= binomial(q - 1 + Rational(a[r]), m.get(supp[r]));
    if (result == 0) return result;
  }
  return result;
}

namespace {

// binom(q + shift, k) as a polynomial in q.
QPolynomial shifted_binomial_poly(long shift, long k) {
  QPolynomial result = QPolynomial::constant(Rational(1));
  QPolynomial q = QPolynomial::variable();
  for (long j = 0; j < k; ++j) {
    result = result * (q + QPolynomial::constant(Rational(shift - j)));
  }
  return result / Rational(factorial(static_cast<unsigned long>(k)));
}

void require_labels(const ExponentVector& m, int n, const char* family) {
  for (int v : m.support()) {
    if (v < 1 || v > n) {
      throw std::invalid_argument(std::string(family) + " of size " +
                                  std::to_string(n) + " has no vertex " +
                                  std::to_string(v));
    }
  }
}

}  // namespace

QPolynomial family_chromatic(const GraphFamily& family,
                             const ExponentVector& m) {
  const auto& entries = m.entries();
  QPolynomial result = QPolynomial::constant(Rational(1));
  switch (family.kind) {
    case FamilyKind::Path:
    case FamilyKind::PathInfinite: {
      if (family.kind == FamilyKind::Path) {
        require_labels(m, family.size, "path");
      }
      // Each factor conditions on the left neighbor's block.
      for (const auto& [v, e] : entries) {
        long prev = m.get(v - 1);
        result = result * shifted_binomial_poly(-prev, e);
      }
      return result;
    }
    case FamilyKind::Star:
    case FamilyKind::StarInfinite: {
      if (family.kind == FamilyKind::Star) {
        require_labels(m, family.size, "star");
      }
      long center = m.get(1);
      for (const auto& [v, e] : entries) {
        result = result * shifted_binomial_poly(v == 1 ? 0 : -center, e);
      }
      return result;
    }
    case FamilyKind::Complete: {
      require_labels(m, family.size, "complete graph");
      long used = 0;
      for (const auto& [v, e] : entries) {
        result = result * shifted_binomial_poly(-used, e);
        used += e;
      }
      return result;
    }
    case FamilyKind::Cycle:
      throw std::invalid_argument(
          "cycles have no product closed form; use read_cycle_polynomial");
    case FamilyKind::Explicit:
      throw std::invalid_argument("no product closed form for explicit graphs");
  }
  throw std::invalid_argument("unknown family kind");
}

QPolynomial read_cycle_polynomial(int n, const ExponentVector& m) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  require_labels(m, n, "cycle");
  std::vector<long> mult(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) mult[static_cast<size_t>(i)] = m.get(i + 1);
  long kmax = *std::min_element(mult.begin(), mult.end());

  QPolynomial prefactor = QPolynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i) {
    long pair = mult[static_cast<size_t>(i)] + mult[static_cast<size_t>((i + 1) % n)];
    prefactor = prefactor * falling_factorial_poly(pair);
  }

  // Sum over k with everything brought to the common denominator
  // prod_i (q)_{m_i + kmax}; the leftover per-i factor is
  // prod_{j = m_i + k}^{m_i + kmax - 1} (q - j).
  QPolynomial sum;
  for (long k = 0; k <= kmax; ++k) {
    Rational scalar(1);
    for (long mi : mult) scalar *= falling_factorial(Rational(mi), k);
    if (scalar == 0) continue;
    if ((k * n) % 2 != 0) scalar = -scalar;
    QPolynomial term = vk_poly(k) * scalar;
    for (long mi : mult) {
      for (long j = mi + k; j < mi + kmax; ++j) {
        term = term * (QPolynomial::variable() -
                       QPolynomial::constant(Rational(j)));
      }
    }
    sum = sum + term;
  }

  QPolynomial denominator = QPolynomial::constant(Rational(1));
  for (long mi : mult) {
    denominator = denominator * falling_factorial_poly(mi + kmax);
  }

  Rational block_orders(1);
  for (long mi : mult) {
    block_orders *= Rational(factorial(static_cast<unsigned long>(mi)));
  }
  return (prefactor * sum).divide_exact(denominator) / block_orders;
}

Rational read_cycle_chromatic(int n, const ExponentVector& m,
                              const Rational& q) {
  return read_cycle_polynomial(n, m).eval(q);
}

Integer cycle_diagonal_q1(int n, long a) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (a < 0) throw std::invalid_argument("negative diagonal index");
  Integer sum(0);
  for (long k = -a; k <= a; ++k) {
    Integer term(1);
    Integer base = binomial_uint(static_cast<unsigned long>(2 * a),
                                 static_cast<unsigned long>(a + k));
    for (int i = 0; i < n; ++i) term *= base;
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  if ((static_cast<long>(n) * a) % 2 != 0) sum = -sum;
  return sum;
}

}  // namespace chorn
