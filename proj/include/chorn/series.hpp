#pragma once

#include <map>
#include <vector>

#include "chorn/exponent.hpp"
#include "chorn/graph.hpp"
#include "chorn/rational.hpp"

namespace chorn {

// Multivariate power series over exact rationals, truncated at a total-degree
// bound. Sparse canonical storage: zero coefficients are never stored, so
// zero-vs-unknown is resolved by the bound alone.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree_bound);
  static TruncatedSeries one(int degree_bound);

  int degree_bound() const { return bound_; }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }
  Rational constant_term() const;

  // Stored value or 0; throws TruncationError above the bound.
  Rational coefficient(const ExponentVector& m) const;
  // Erases the entry when the value is zero; rejects degrees above the bound.
  void set(const ExponentVector& m, const Rational& value);
  void add(const ExponentVector& m, const Rational& value);

  bool operator==(const TruncatedSeries& other) const {
    return bound_ == other.bound_ && terms_ == other.terms_;
  }

 private:
  int bound_ = 0;
  std::map<ExponentVector, Rational> terms_;
};

// Sum over independent sets S, |S| <= D, of prod_{i in S} x_i.
TruncatedSeries independence_series(const Graph& g, int degree_bound);
// Infinite families are reduced to the induced subgraph on the window.
TruncatedSeries independence_series(const GraphFamily& family,
                                    const std::vector<int>& window,
                                    int degree_bound);

// Cauchy product truncated at the (shared) bound.
TruncatedSeries series_multiply(const TruncatedSeries& a,
                                const TruncatedSeries& b);

// Degree-graded inversion; requires nonzero constant term.
TruncatedSeries series_invert(const TruncatedSeries& s);

// s^q: repeated multiplication for q > 0, inversion then power for q < 0.
TruncatedSeries series_int_power(const TruncatedSeries& s, long q);

// Substitution x_i := t; entry k is the sum of all total-degree-k
// coefficients.
std::vector<Rational> one_variable_collapse(const TruncatedSeries& s);

}  // namespace chorn
