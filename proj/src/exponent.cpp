#include "chorn/exponent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chorn {

ExponentVector::ExponentVector(std::vector<std::pair<int, int>> entries) {
  std::map<int, int> merged;
  for (const auto& [label, exp] : entries) {
    if (exp < 0) {
      throw std::invalid_argument("negative multiplicity for vertex " +
                                  std::to_string(label));
    }
    merged[label] += exp;
  }
  for (const auto& [label, exp] : merged) {
    if (exp != 0) {
      entries_.emplace_back(label, exp);
      degree_ += exp;
    }
  }
}

ExponentVector ExponentVector::unit(int label) {
  return ExponentVector({{label, 1}});
}

ExponentVector ExponentVector::from_dense(const std::vector<int>& window,
                                          const std::vector<int>& values) {
  if (values.size() > window.size()) {
    throw std::invalid_argument("more multiplicities than window vertices");
  }
  std::vector<std::pair<int, int>> entries;
  for (size_t i = 0; i < values.size(); ++i) {
    entries.emplace_back(window[i], values[i]);
  }
  return ExponentVector(std::move(entries));
}

int ExponentVector::get(int label) const {
  for (const auto& [l, e] : entries_) {
    if (l == label) return e;
  }
  return 0;
}

std::vector<int> ExponentVector::support() const {
  std::vector<int> s;
  s.reserve(entries_.size());
  for (const auto& [l, e] : entries_) s.push_back(l);
  return s;
}

ExponentVector ExponentVector::plus(const ExponentVector& other) const {
  std::vector<std::pair<int, int>> entries = entries_;
  entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
  return ExponentVector(std::move(entries));
}

ExponentVector ExponentVector::plus_unit(int label) const {
  return plus(unit(label));
}

ExponentVector ExponentVector::minus(const ExponentVector& other) const {
  std::map<int, int> merged;
  for (const auto& [l, e] : entries_) merged[l] = e;
  for (const auto& [l, e] : other.entries_) {
    merged[l] -= e;
    if (merged[l] < 0) {
      throw std::invalid_argument("exponent difference negative at vertex " +
                                  std::to_string(l));
    }
  }
  std::vector<std::pair<int, int>> entries(merged.begin(), merged.end());
  return ExponentVector(std::move(entries));
}

bool ExponentVector::dominates(const ExponentVector& other) const {
  for (const auto& [l, e] : other.entries_) {
    if (get(l) < e) return false;
  }
  return true;
}

ExponentVector ExponentVector::relabeled(
    const std::vector<std::pair<int, int>>& perm) const {
  std::map<int, int> image(perm.begin(), perm.end());
  std::vector<std::pair<int, int>> entries;
  for (const auto& [l, e] : entries_) {
    auto it = image.find(l);
    if (it == image.end()) {
      throw std::invalid_argument("relabeling misses vertex " +
                                  std::to_string(l));
    }
    entries.emplace_back(it->second, e);
  }
  return ExponentVector(std::move(entries));
}

std::vector<int> ExponentVector::to_dense(const std::vector<int>& window) const {
  std::vector<int> dense(window.size(), 0);
  for (const auto& [l, e] : entries_) {
    auto it = std::find(window.begin(), window.end(), l);
    if (it == window.end()) {
      throw std::invalid_argument("vertex " + std::to_string(l) +
                                  " outside the window");
    }
    dense[static_cast<size_t>(it - window.begin())] = e;
  }
  return dense;
}

std::string ExponentVector::to_string() const {
  if (entries_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, e] : entries_) {
    if (!first) out << "*";
    first = false;
    out << "x" << l;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

bool ExponentVector::operator<(const ExponentVector& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_;
  // Same degree: entry lists compared lexicographically; smaller labels
  // first, ties broken by the smaller exponent. Within a fixed degree no
  // entry list is a prefix of another, so this is total.
  size_t i = 0, j = 0;
  while (i < entries_.size() && j < other.entries_.size()) {
    const auto& [la, ea] = entries_[i];
    const auto& [lb, eb] = other.entries_[j];
    if (la != lb) return la < lb;
    if (ea != eb) return ea < eb;
    ++i;
    ++j;
  }
  return false;
}

}  // namespace chorn
