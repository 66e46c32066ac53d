#pragma once

#include <vector>

#include "chorn/exponent.hpp"
#include "chorn/graph.hpp"
#include "chorn/qpolynomial.hpp"
#include "chorn/rational.hpp"

namespace chorn {

// a_r = m_{i_r} + sum of m_{i_s} over earlier support vertices adjacent to
// i_r, "earlier" in PEO order. Result aligned with supp(m) sorted by PEO
// rank. Always a_r >= m_{i_r}.
std::vector<Integer> a_vector(const Graph& g, const PEOrdering& peo,
                              const ExponentVector& m);

// prod_r binom(q-1+a_r, m_{i_r}). Equals (-1)^{|m|} times the coefficient of
// x^m in I(G,x)^{-q} (see the acceptance suite); strictly positive for
// integer q >= 1. q is accepted as an arbitrary rational so polynomial
// identities can be sampled.
Rational peo_coefficient(const Graph& g, const PEOrdering& peo,
                         const ExponentVector& m, const Rational& q);

// Product-of-binomials generalized chromatic polynomial for Path, Star,
// Complete and their infinite variants. Cycles are rejected
// (read_cycle_chromatic handles them).
QPolynomial family_chromatic(const GraphFamily& family,
                             const ExponentVector& m);

// pi^m_{C_n}(q) as an exact polynomial, via Read's product-times-sum
// formula. The sub-expressions "(m_i)^k" and "(q)^{m_i+k}" are falling
// factorials, the k-sum runs to min_i m_i, and the whole expression is
// divided by prod m_i! -- this is the reading that matches the brute-force
// coloring oracle across the acceptance grid. Evaluation is symbolic in q
// (single common denominator, exact polynomial division), so integer q with
// vanishing (q)_{m_i+k} is safe.
QPolynomial read_cycle_polynomial(int n, const ExponentVector& m);
Rational read_cycle_chromatic(int n, const ExponentVector& m,
                              const Rational& q);

// (-1)^{na} sum_{|k|<=a} (-1)^k binom(2a, a+k)^n: the coefficient of
// x^(a,...,a) in I(C_n, x)^{-1}.
Integer cycle_diagonal_q1(int n, long a);

}  // namespace chorn
