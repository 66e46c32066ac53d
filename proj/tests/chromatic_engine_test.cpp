#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "chorn/chromatic.hpp"
#include "chorn/errors.hpp"
#include "chorn/series.hpp"

using namespace chorn;

namespace {

ExponentVector ev(std::vector<std::pair<int, int>> entries) {
  return ExponentVector(std::move(entries));
}

QPolynomial poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    }
    out.push_back(build_graph(n, edges));
  }
  return out;
}

std::vector<ExponentVector> all_exponents(const std::vector<int>& vertices,
                                          int bound) {
  std::vector<ExponentVector> out;
  std::vector<std::pair<int, int>> acc;
  auto rec = [&](auto&& self, size_t idx, int left) -> void {
    if (idx == vertices.size()) {
      out.emplace_back(acc);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e > 0) acc.emplace_back(vertices[idx], e);
      self(self, idx + 1, left - e);
      if (e > 0) acc.pop_back();
    }
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace

TEST_CASE("multicolor_count_bruteforce") {
  CHECK(multicolor_count_bruteforce(build_graph(2, {{1, 2}}),
                                    ev({{1, 1}, {2, 1}}), 2) == 2);
  CHECK(multicolor_count_bruteforce(family_graph(FamilyKind::Path, 3),
                                    ev({{1, 1}, {3, 1}}), 1) == 1);
  CHECK(multicolor_count_bruteforce(family_graph(FamilyKind::Cycle, 4),
                                    ev({{1, 1}, {2, 1}, {3, 1}, {4, 1}}), 3) ==
        18);
  CHECK(multicolor_count_bruteforce(build_graph(1, {}), ev({{1, 3}}), 2) == 0);
  CHECK_THROWS_AS(multicolor_count_bruteforce(
                      build_graph(1, {}), ev({{2, 1}}), 2),
                  std::invalid_argument);
}

TEST_CASE("enumeration guard honors CHORN_GUARD") {
  setenv("CHORN_GUARD", "10", 1);
  CHECK(enumeration_guard() == 10);
  Graph g = build_graph(2, {});
  CHECK_THROWS_AS(multicolor_count_bruteforce(g, ev({{1, 3}, {2, 3}}), 12),
                  GuardError);
  unsetenv("CHORN_GUARD");
  CHECK(enumeration_guard() == 10'000'000ull);
  CHECK(multicolor_count_bruteforce(g, ev({{1, 3}, {2, 3}}), 12) ==
        Integer(220) * 220);
}

TEST_CASE("ordered_partition_counts") {
  PartitionCounts k2 =
      ordered_partition_counts(build_graph(2, {{1, 2}}), ev({{1, 1}, {2, 1}}));
  REQUIRE(k2.counts.size() == 3);
  CHECK(k2.counts[1] == 0);
  CHECK(k2.counts[2] == 2);

  // ({1},{1}) is the only ordered 2-tuple: blocks are sets, so the two
  // copies split, and the tuple entries are equal as sets.
  PartitionCounts single =
      ordered_partition_counts(build_graph(1, {}), ev({{1, 2}}));
  CHECK(single.counts[1] == 0);
  CHECK(single.counts[2] == 1);

  PartitionCounts pair =
      ordered_partition_counts(build_graph(2, {}), ev({{1, 1}, {2, 1}}));
  CHECK(pair.counts[1] == 1);
  CHECK(pair.counts[2] == 2);
}

TEST_CASE("generalized_chromatic") {
  CHECK(generalized_chromatic(build_graph(2, {{1, 2}}), ev({{1, 1}, {2, 1}})) ==
        poly({0, -1, 1}));
  CHECK(generalized_chromatic(build_graph(2, {{1, 2}}), ev({})) == poly({1}));
  CHECK(generalized_chromatic(build_graph(1, {}), ev({{1, 2}})) ==
        poly({0, -1, 1}) / Rational(2));
}

TEST_CASE("ordinary_chromatic") {
  CHECK(ordinary_chromatic(family_graph(FamilyKind::Complete, 3)) ==
        poly({0, 2, -3, 1}));
  CHECK(ordinary_chromatic(build_graph(3, {})) == poly({0, 0, 0, 1}));
  // (q-1)^4 + (q-1)
  CHECK(ordinary_chromatic(family_graph(FamilyKind::Cycle, 4)) ==
        poly({0, -3, 6, -4, 1}));
  CHECK_THROWS_AS(ordinary_chromatic(family_graph(FamilyKind::Path, 17)),
                  GuardError);
}

TEST_CASE("generalized_chromatic_via_join") {
  CHECK(generalized_chromatic_via_join(build_graph(1, {}), ev({{1, 2}})) ==
        poly({0, -1, 1}) / Rational(2));
  CHECK(generalized_chromatic_via_join(build_graph(2, {{1, 2}}),
                                       ev({{1, 2}, {2, 1}})) ==
        poly({0, 2, -3, 1}) / Rational(2));
  CHECK(generalized_chromatic_via_join(family_graph(FamilyKind::Path, 3),
                                       ev({{1, 1}, {2, 1}, {3, 1}})) ==
        poly({0, 1, -2, 1}));
}

TEST_CASE("interpolate_q") {
  using Sample = std::pair<Rational, Rational>;
  std::vector<Sample> k2{{Rational(0), Rational(0)},
                         {Rational(1), Rational(0)},
                         {Rational(2), Rational(2)}};
  CHECK(interpolate_q(k2, 2) == poly({0, -1, 1}));

  std::vector<Sample> ones{{Rational(0), Rational(1)},
                           {Rational(1), Rational(1)},
                           {Rational(2), Rational(1)}};
  CHECK(interpolate_q(ones, 0) == poly({1}));
  CHECK(interpolate_q(ones, 2) == poly({1}));

  std::vector<Sample> bad{{Rational(0), Rational(0)},
                          {Rational(1), Rational(1)},
                          {Rational(2), Rational(5)}};
  CHECK_THROWS_AS(interpolate_q(bad, 1), std::domain_error);
  CHECK_THROWS_AS(interpolate_q(ones, 5), std::invalid_argument);
}

TEST_CASE("three routes agree on small graphs") {
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      for (const auto& m : all_exponents(g.vertices(), 3)) {
        QPolynomial pk = generalized_chromatic(g, m);
        CHECK(pk == generalized_chromatic_via_join(g, m));
        CHECK(pk == generalized_chromatic_via_interpolation(g, m));
      }
    }
  }
}

TEST_CASE("degree, leading coefficient and q=1 evaluation") {
  Graph g = build_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  for (const auto& m : all_exponents(g.vertices(), 4)) {
    QPolynomial pi = generalized_chromatic(g, m);
    CHECK(pi.degree() == m.total_degree());
    Rational lead(1);
    for (const auto& [v, e] : m.entries()) {
      lead /= Rational(factorial(static_cast<unsigned long>(e)));
    }
    CHECK(pi.leading() == lead);

    bool unit = true;
    auto supp = m.support();
    for (const auto& [v, e] : m.entries()) unit = unit && e <= 1;
    for (size_t i = 0; i < supp.size() && unit; ++i) {
      for (size_t j = i + 1; j < supp.size(); ++j) {
        if (g.has_edge(supp[i], supp[j])) unit = false;
      }
    }
    CHECK(pi.eval(Rational(1)) == (unit ? 1 : 0));
  }
}

TEST_CASE("bridge identity on a small grid") {
  for (const Graph& g : all_labeled_graphs(3)) {
    TruncatedSeries base = independence_series(g, 3);
    for (long q = -3; q <= 3; ++q) {
      TruncatedSeries s = series_int_power(base, q);
      for (const auto& m : all_exponents(g.vertices(), 3)) {
        CHECK(s.coefficient(m) ==
              generalized_chromatic(g, m).eval(Rational(q)));
      }
    }
  }
}

TEST_CASE("binomial negation identity") {
  for (long k = 0; k <= 5; ++k) {
    for (long q = -4; q <= 4; ++q) {
      Rational left = binomial(Rational(-q), k);
      Rational right = binomial(Rational(q + k - 1), k);
      if (k % 2 != 0) right = -right;
      CHECK(left == right);
    }
  }
}
