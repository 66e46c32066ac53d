#pragma once

#include <vector>

#include "chorn/exponent.hpp"
#include "chorn/graph.hpp"
#include "chorn/qpolynomial.hpp"
#include "chorn/rational.hpp"

namespace chorn {

// Enumeration size guard, overridable via the CHORN_GUARD env var.
unsigned long long enumeration_guard();

// counts[k] = number of ordered k-tuples of nonempty independent sets whose
// disjoint union is the multiset given by m. counts has size |m|+1,
// counts[0] nonzero only for m = 0.
struct PartitionCounts {
  std::vector<Integer> counts;
};

// Number of proper vertex multi-colorings of g for m using at most q colors.
// The oracle for everything else in this module.
Integer multicolor_count_bruteforce(const Graph& g, const ExponentVector& m,
                                    long q);

PartitionCounts ordered_partition_counts(const Graph& g,
                                         const ExponentVector& m);

// pi^m_G(q) = sum_k counts[k] * binom(q, k); degree |m|.
QPolynomial generalized_chromatic(const Graph& g, const ExponentVector& m);

// Ordinary chromatic polynomial of the join graph G(m), divided by prod m_i!.
QPolynomial generalized_chromatic_via_join(const Graph& g,
                                           const ExponentVector& m);

// Deletion-contraction with memoization on a canonical key.
QPolynomial ordinary_chromatic(const Graph& g);

// Interpolation of brute-force counts at q = 0..|m|.
QPolynomial generalized_chromatic_via_interpolation(const Graph& g,
                                                    const ExponentVector& m);

}  // namespace chorn
