#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chorn {

// Finite-support exponent vector: vertex label -> multiplicity. Canonical
// form stores only nonzero entries, sorted by label.
class ExponentVector {
 public:
  ExponentVector() = default;
  // Canonicalizes: merges duplicate labels, drops zeros. Throws on negative
  // multiplicities.
  explicit ExponentVector(std::vector<std::pair<int, int>> entries);

  static ExponentVector unit(int label);
  // Dense constructor: values[i] is the multiplicity of window[i].
  static ExponentVector from_dense(const std::vector<int>& window,
                                   const std::vector<int>& values);

  int get(int label) const;
  int total_degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  std::vector<int> support() const;

  ExponentVector plus(const ExponentVector& other) const;
  ExponentVector plus_unit(int label) const;
  // Componentwise difference; throws if any entry would go negative.
  ExponentVector minus(const ExponentVector& other) const;
  // True if other <= this componentwise.
  bool dominates(const ExponentVector& other) const;

  // Relabels through a vertex permutation: result[perm(i)] = this[i].
  ExponentVector relabeled(const std::vector<std::pair<int, int>>& perm) const;

  std::vector<int> to_dense(const std::vector<int>& window) const;
  std::string to_string() const;  // e.g. "x1^2*x3"

  bool operator==(const ExponentVector& other) const {
    return entries_ == other.entries_;
  }
  bool operator!=(const ExponentVector& other) const {
    return !(*this == other);
  }
  // Graded order: lower total degree first; within a degree, supports on
  // smaller labels come first, ties broken by the smaller exponent (so
  // x1*x2 precedes x1^2).
  bool operator<(const ExponentVector& other) const;

 private:
  std::vector<std::pair<int, int>> entries_;
  int degree_ = 0;
};

}  // namespace chorn
