#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chorn/exponent.hpp"
#include "chorn/graph.hpp"
#include "chorn/rational.hpp"

namespace chorn {

// Complete coefficient table of I(G,x)^power up to total degree D over a
// vertex window: every m with |m| <= D has an entry, possibly zero.
struct CoefficientTable {
  std::string graph_id;
  long power = 0;
  int degree_bound = 0;
  std::vector<int> window;
  std::map<ExponentVector, Rational> entries;
};

CoefficientTable coefficient_table(const GraphFamily& family, long power,
                                   const std::vector<int>& window,
                                   int degree_bound);

// Smallest (graded-lex) exponent vector with a zero entry, or absent.
std::optional<ExponentVector> zero_scan(const CoefficientTable& table);

// A sampling ray: base + a*step, a = 0, 1, 2, ...
struct Ray {
  std::string name;
  ExponentVector base;
  ExponentVector step;
};

// One coefficient-ratio observation c_{m+step}/c_m; params is the ray
// parameter (and any fixed support multiplicities are folded into the ray
// definition).
struct RatioSample {
  std::vector<Rational> params;
  Rational value;
};

struct RatioReport {
  std::vector<RatioSample> samples;
  // Base points excluded because c_m = 0 (would divide by zero).
  std::vector<ExponentVector> zero_denominators;
};

// Samples c_{base+(a+1)step}/c_{base+a*step} for a = 0..max_steps-1, staying
// inside the table.
RatioReport ratio_samples(const CoefficientTable& table, const Ray& ray,
                          int max_steps);

struct FitCaps {
  int num = 2;
  int den = 2;
};

// A fitted rational function P/Q over `dim` parameters with total-degree
// caps; coefficients aligned with the graded-lex monomial basis.
struct RationalFunctionFit {
  int dim = 1;
  FitCaps caps;
  std::vector<Rational> num;
  std::vector<Rational> den;

  Rational eval(const std::vector<Rational>& params) const;
  std::string to_string() const;  // human-readable P(a)/Q(a)
};

// Number of monomials of total degree <= cap in dim variables.
long monomial_count(int dim, int cap);
// Degrees of freedom of a fit: (|P basis| - 1) + (|Q basis| - 1).
long fit_dof(int dim, const FitCaps& caps);

// Exact fit: cross-multiplied homogeneous system, nullspace candidates, then
// a mandatory verification pass against every sample. Requires
// samples.size() >= fit_dof + 2.
std::optional<RationalFunctionFit> rational_fit(
    const std::vector<RatioSample>& samples, const FitCaps& caps);

// Diagonal coefficients c_a of x^(a,...,a) in I(G,x)^{-q} over the window,
// a = 0..count-1, from a closed form: Read/Corollary formula when the window
// graph is a cycle, the PEO product formula when it is chordal. Absent when
// neither closed form applies.
std::optional<std::vector<Rational>> diagonal_coefficients(
    const Graph& window_graph, long q, int count);

struct HornOptions {
  FitCaps caps;
  int ray_length = 6;    // samples per axis ray (clipped by the table bound)
  int diag_samples = 0;  // 0 = automatic (dof of the diagonal caps + 2)
};

struct RayOutcome {
  std::string ray;
  FitCaps caps;
  long sample_count = 0;
  // "fit", "no_fit", or "skipped" (not enough samples to attempt one)
  std::string status;
  std::string fitted;  // human-readable fit when status == "fit"
  std::string note;
};

// Bounded-evidence result: HornConsistent and RatioFitFailed are statements
// about (window, D, caps, ray set), not proofs.
struct HornVerdict {
  enum class Status { HornConsistent, ZeroCoefficientWitness, RatioFitFailed };

  Status status = Status::HornConsistent;
  std::string graph_id;
  long q = 1;  // analyzed power is -q
  int degree_bound = 0;
  FitCaps caps;
  std::optional<ExponentVector> zero_witness;
  std::vector<RayOutcome> rays;
  std::string failing_ray;
};

std::string to_string(HornVerdict::Status status);

// Builds the table for I^{-q}, scans for interior zeros, then fits the
// diagonal composite ray (closed-form sampled where available, caps widened
// to the PEO-graph degree bound n+|E|) and axis rays over supports of size
// <= 2. Deterministic given all arguments.
HornVerdict horn_verdict(const GraphFamily& family, long q,
                         const std::vector<int>& window, int degree_bound,
                         const HornOptions& options);

}  // namespace chorn
