#include "chorn/chromatic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "chorn/errors.hpp"

namespace chorn {

unsigned long long enumeration_guard() {
  if (const char* env = std::getenv("CHORN_GUARD")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return 10'000'000ull;
}

namespace {

// Enumerates k-subsets of the bits set in `allowed`, invoking fn(mask).
template <typename Fn>
void for_each_subset(unsigned long long allowed, int k, unsigned long long acc,
                     int lowest_bit, Fn&& fn) {
  if (k == 0) {
    fn(acc);
    return;
  }
  for (int b = lowest_bit; b < 64; ++b) {
    unsigned long long bit = 1ull << b;
    if (bit > allowed) break;
    if (allowed & bit) {
      for_each_subset(allowed, k - 1, acc | bit, b + 1, fn);
    }
  }
}

Integer count_colorings(const Graph& g, const std::vector<int>& supp,
                        const std::vector<int>& mult, size_t idx, long q,
                        std::vector<unsigned long long>& chosen) {
  if (idx == supp.size()) return Integer(1);
  unsigned long long forbidden = 0;
  for (size_t j = 0; j < idx; ++j) {
    if (g.has_edge(supp[j], supp[idx])) forbidden |= chosen[j];
  }
  unsigned long long allowed = ((q >= 64 ? ~0ull : (1ull << q) - 1)) & ~forbidden;
  Integer total(0);
  for_each_subset(allowed, mult[idx], 0ull, 0, [&](unsigned long long mask) {
    chosen[idx] = mask;
    total += count_colorings(g, supp, mult, idx + 1, q, chosen);
  });
  return total;
}

}  // namespace

Integer multicolor_count_bruteforce(const Graph& g, const ExponentVector& m,
                                    long q) {
  if (q < 0) throw std::invalid_argument("q must be positive");
  std::vector<int> supp, mult;
  for (const auto& [v, e] : m.entries()) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("supp(m) contains unknown vertex " +
                                  std::to_string(v));
    }
    supp.push_back(v);
    mult.push_back(e);
  }
  if (q > 62) throw GuardError("brute-force coloring supports q <= 62");
  // Estimate the assignment count before enumerating.
  Rational estimate(1);
  for (int e : mult) estimate *= Rational(binomial_uint(static_cast<unsigned long>(q),
                                                        static_cast<unsigned long>(e)));
  if (estimate > Rational(Integer(static_cast<unsigned long>(enumeration_guard())))) {
    throw GuardError("coloring enumeration would visit ~" +
                     estimate.get_num().get_str() + " assignments (guard " +
                     std::to_string(enumeration_guard()) + ")");
  }
  for (int e : mult) {
    if (e > q) return Integer(0);  // not enough colors for one vertex
  }
  std::vector<unsigned long long> chosen(supp.size(), 0);
  return count_colorings(g, supp, mult, 0, q, chosen);
}

PartitionCounts ordered_partition_counts(const Graph& g,
                                         const ExponentVector& m) {
  const auto& entries = m.entries();
  for (const auto& [v, e] : entries) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("supp(m) contains unknown vertex " +
                                  std::to_string(v));
    }
  }
  // Sub-multiset lattice size guards the DP.
  unsigned long long lattice = 1;
  for (const auto& [v, e] : entries) {
    lattice *= static_cast<unsigned long long>(e) + 1;
    if (lattice > enumeration_guard()) {
      throw GuardError("partition DP lattice too large");
    }
  }
  int n = static_cast<int>(entries.size());
  if (n > 30) throw GuardError("support too large for subset enumeration");
  // Nonempty independent subsets of supp(m), as bitmasks.
  std::vector<unsigned> independent;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if ((mask & (1u << j)) &&
            g.has_edge(entries[static_cast<size_t>(i)].first,
                       entries[static_cast<size_t>(j)].first)) {
          ok = false;
        }
      }
    }
    if (ok) independent.push_back(mask);
  }
  // f(m')[k] = #ordered k-tuples assembling m'; recurse on the last block.
  std::map<std::vector<int>, std::vector<Integer>> memo;
  std::vector<int> full(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = entries[static_cast<size_t>(i)].second;

  auto solve = [&](auto&& self, const std::vector<int>& rem) -> const std::vector<Integer>& {
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    int total = 0;
    for (int x : rem) total += x;
    std::vector<Integer> counts(static_cast<size_t>(total) + 1, Integer(0));
    if (total == 0) {
      counts[0] = 1;
    } else {
      for (unsigned mask : independent) {
        std::vector<int> next = rem;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            if (next[static_cast<size_t>(i)] == 0) {
              ok = false;
              break;
            }
            --next[static_cast<size_t>(i)];
          }
        }
        if (!ok) continue;
        const auto& sub = self(self, next);
        for (size_t k = 0; k + 1 < counts.size() && k < sub.size(); ++k) {
          counts[k + 1] += sub[k];
        }
      }
    }
    return memo.emplace(rem, std::move(counts)).first->second;
  };

  PartitionCounts result;
  result.counts = solve(solve, full);
  return result;
}

QPolynomial generalized_chromatic(const Graph& g, const ExponentVector& m) {
  PartitionCounts pc = ordered_partition_counts(g, m);
  QPolynomial result;
  for (size_t k = 0; k < pc.counts.size(); ++k) {
    if (pc.counts[k] == 0) continue;
    result = result + binomial_poly(static_cast<long>(k)) * Rational(pc.counts[k]);
  }
  return result;
}

namespace {

// Canonical key: vertex count, then edges over labels normalized to 0..n-1.
std::vector<int> canonical_key(const Graph& g) {
  std::map<int, int> index;
  int next = 0;
  for (int v : g.vertices()) index[v] = next++;
  std::vector<int> key{g.vertex_count()};
  for (const auto& [u, v] : g.edges()) {
    key.push_back(index[u]);
    key.push_back(index[v]);
  }
  return key;
}

Graph delete_edge(const Graph& g, std::pair<int, int> e) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (std::minmax(u, v) != std::minmax(e.first, e.second)) {
      edges.emplace_back(u, v);
    }
  }
  return Graph(g.vertices(), edges);
}

Graph contract_edge(const Graph& g, std::pair<int, int> e) {
  int keep = std::min(e.first, e.second);
  int drop = std::max(e.first, e.second);
  std::vector<int> vertices;
  for (int v : g.vertices()) {
    if (v != drop) vertices.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (u == drop) u = keep;
    if (v == drop) v = keep;
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph(std::move(vertices), edges);
}

QPolynomial chromatic_rec(const Graph& g,
                          std::map<std::vector<int>, QPolynomial>& cache) {
  auto edges = g.edges();
  if (edges.empty()) {
    std::vector<Rational> c(static_cast<size_t>(g.vertex_count()) + 1,
                            Rational(0));
    c.back() = 1;
    return QPolynomial(std::move(c));  // q^n
  }
  auto key = canonical_key(g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QPolynomial result = chromatic_rec(delete_edge(g, edges.front()), cache) -
                       chromatic_rec(contract_edge(g, edges.front()), cache);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

QPolynomial ordinary_chromatic(const Graph& g) {
  if (g.vertex_count() > 16) {
    throw GuardError("deletion-contraction guard: " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  std::map<std::vector<int>, QPolynomial> cache;
  return chromatic_rec(g, cache);
}

QPolynomial generalized_chromatic_via_join(const Graph& g,
                                           const ExponentVector& m) {
  JoinGraph jg = join_graph(g, m);
  Rational divisor(1);
  for (const auto& [v, e] : m.entries()) {
    divisor *= Rational(factorial(static_cast<unsigned long>(e)));
  }
  return ordinary_chromatic(jg.graph) / divisor;
}

QPolynomial generalized_chromatic_via_interpolation(const Graph& g,
                                                    const ExponentVector& m) {
  int d = m.total_degree();
  std::vector<std::pair<Rational, Rational>> samples;
  for (long q = 0; q <= d; ++q) {
    samples.emplace_back(Rational(q),
                         Rational(multicolor_count_bruteforce(g, m, q)));
  }
  return interpolate_q(samples, d);
}

}  // namespace chorn
