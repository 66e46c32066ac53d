#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chorn/chromatic.hpp"
#include "chorn/closed_forms.hpp"
#include "chorn/series.hpp"

using namespace chorn;

namespace {

ExponentVector ev(std::vector<std::pair<int, int>> entries) {
  return ExponentVector(std::move(entries));
}

std::vector<Integer> ints(std::vector<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("a_vector") {
  Graph s3 = family_graph(FamilyKind::Star, 3);
  PEOrdering natural{{1, 2, 3}, {}};
  CHECK(a_vector(s3, natural, ev({{1, 1}, {2, 1}, {3, 1}})) ==
        ints({1, 2, 2}));

  Graph edgeless = build_graph(3, {});
  CHECK(a_vector(edgeless, natural, ev({{1, 2}, {3, 5}})) == ints({2, 5}));

  Graph p2 = build_graph(2, {{1, 2}});
  PEOrdering p2order{{1, 2}, {}};
  CHECK(a_vector(p2, p2order, ev({{1, 3}, {2, 4}})) == ints({3, 7}));

  CHECK_THROWS_AS(a_vector(p2, p2order, ev({{5, 1}})), std::invalid_argument);
}

TEST_CASE("a_vector dominates m everywhere") {
  Graph g = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
  auto peo = find_peo(g);
  REQUIRE(peo.has_value());
  std::vector<std::pair<int, int>> acc;
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == 5) {
      ExponentVector m(acc);
      std::vector<int> supp = m.support();
      std::map<int, int> rank;
      for (size_t i = 0; i < peo->order.size(); ++i) rank[peo->order[i]] = (int)i;
      std::sort(supp.begin(), supp.end(),
                [&](int a, int b) { return rank[a] < rank[b]; });
      std::vector<Integer> a = a_vector(g, *peo, m);
      for (size_t r = 0; r < supp.size(); ++r) {
        CHECK(a[r] >= m.get(supp[r]));
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e > 0) acc.emplace_back(v, e);
      self(self, v + 1, left - e);
      if (e > 0) acc.pop_back();
    }
  };
  rec(rec, 1, 4);
}

TEST_CASE("peo_coefficient") {
  Graph p2 = build_graph(2, {{1, 2}});
  PEOrdering p2order{{1, 2}, {}};
  CHECK(peo_coefficient(p2, p2order, ev({{1, 1}, {2, 1}}), Rational(1)) == 2);
  CHECK(peo_coefficient(p2, p2order, ev({}), Rational(1)) == 1);

  Graph k3 = family_graph(FamilyKind::Complete, 3);
  auto peo = find_peo(k3);
  REQUIRE(peo.has_value());
  CHECK(peo_coefficient(k3, *peo, ev({{1, 1}, {2, 1}, {3, 1}}), Rational(1)) ==
        6);
}

TEST_CASE("peo_coefficient matches raw inverse-series coefficients") {
  std::vector<Graph> graphs{family_graph(FamilyKind::Path, 4),
                            family_graph(FamilyKind::Star, 4),
                            family_graph(FamilyKind::Complete, 4),
                            build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}})};
  for (const Graph& g : graphs) {
    auto peo = find_peo(g);
    REQUIRE(peo.has_value());
    for (long q = 1; q <= 3; ++q) {
      TruncatedSeries inv =
          series_int_power(independence_series(g, 5), -q);
      for (const auto& [m, c] : inv.terms()) {
        Rational expected = m.total_degree() % 2 == 0 ? c : -c;
        CHECK(peo_coefficient(g, *peo, m, Rational(q)) == expected);
      }
    }
  }
}

TEST_CASE("peo_coefficient is independent of the chosen PEO") {
  Graph g = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
  std::vector<int> perm{1, 2, 3, 4};
  std::vector<std::vector<int>> valid;
  do {
    if (verify_peo(g, perm)) valid.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(valid.size() >= 2);
  ExponentVector m = ev({{1, 2}, {2, 1}, {3, 1}, {4, 1}});
  for (long q = 1; q <= 3; ++q) {
    Rational first =
        peo_coefficient(g, PEOrdering{valid.front(), {}}, m, Rational(q));
    for (const auto& order : valid) {
      CHECK(peo_coefficient(g, PEOrdering{order, {}}, m, Rational(q)) ==
            first);
    }
  }
}

TEST_CASE("family_chromatic closed forms") {
  // K_3, all-ones: q(q-1)(q-2)
  QPolynomial k3 = family_chromatic({FamilyKind::Complete, 3, {}},
                                    ev({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(k3 == QPolynomial({Rational(0), Rational(2), Rational(-3), Rational(1)}));

  // S_3, all-ones: q(q-1)^2
  QPolynomial s3 = family_chromatic({FamilyKind::Star, 3, {}},
                                    ev({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(s3 == QPolynomial({Rational(0), Rational(1), Rational(-2), Rational(1)}));

  // Infinite path, support {1,3}: decoupled binomials
  QPolynomial pinf = family_chromatic({FamilyKind::PathInfinite, 0, {}},
                                      ev({{1, 2}, {3, 1}}));
  QPolynomial expected =
      QPolynomial({Rational(0), Rational(-1, 2), Rational(1, 2)}) *
      QPolynomial({Rational(0), Rational(1)});
  CHECK(pinf == expected);

  CHECK_THROWS_AS(family_chromatic({FamilyKind::Cycle, 4, {}}, ev({{1, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_chromatic({FamilyKind::Star, 3, {}}, ev({{4, 1}})),
                  std::invalid_argument);
}

TEST_CASE("family_chromatic agrees with the partition route") {
  for (int n = 1; n <= 5; ++n) {
    for (FamilyKind kind :
         {FamilyKind::Path, FamilyKind::Star, FamilyKind::Complete}) {
      Graph g = family_graph(kind, n);
      std::vector<std::pair<int, int>> acc;
      auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == n + 1) {
          ExponentVector m(acc);
          CHECK(family_chromatic({kind, n, {}}, m) ==
                generalized_chromatic(g, m));
          return;
        }
        for (int e = 0; e <= std::min(left, 2); ++e) {
          if (e > 0) acc.emplace_back(v, e);
          self(self, v + 1, left - e);
          if (e > 0) acc.pop_back();
        }
      };
      rec(rec, 1, 4);
    }
  }
}

TEST_CASE("read_cycle_chromatic") {
  CHECK(read_cycle_chromatic(4, ev({{1, 1}, {2, 1}, {3, 1}, {4, 1}}),
                             Rational(3)) == 18);
  QPolynomial single = read_cycle_polynomial(5, ev({{1, 1}}));
  CHECK(single == QPolynomial({Rational(0), Rational(1)}));
  CHECK(read_cycle_chromatic(4, ev({{1, 1}, {3, 1}}), Rational(2)) == 4);
  CHECK_THROWS_AS(read_cycle_polynomial(2, ev({{1, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_cycle_polynomial(4, ev({{5, 1}})),
                  std::invalid_argument);
}

TEST_CASE("read_cycle_chromatic matches brute force on a coarse grid") {
  for (int n = 3; n <= 4; ++n) {
    Graph g = family_graph(FamilyKind::Cycle, n);
    std::vector<std::pair<int, int>> acc;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n + 1) {
        ExponentVector m(acc);
        QPolynomial pi = read_cycle_polynomial(n, m);
        for (long q = 1; q <= 4; ++q) {
          CHECK(pi.eval(Rational(q)) ==
                Rational(multicolor_count_bruteforce(g, m, q)));
        }
        return;
      }
      for (int e = 0; e <= 2; ++e) {
        if (e > 0) acc.emplace_back(v, e);
        self(self, v + 1);
        if (e > 0) acc.pop_back();
      }
    };
    rec(rec, 1);
  }
}

TEST_CASE("cycle_diagonal_q1") {
  CHECK(cycle_diagonal_q1(4, 0) == 1);
  CHECK(cycle_diagonal_q1(4, 1) == 14);
  CHECK(cycle_diagonal_q1(4, 2) == 786);
  CHECK(cycle_diagonal_q1(4, 3) == 61340);
  CHECK(cycle_diagonal_q1(5, 1) == -30);

  for (int n = 4; n <= 5; ++n) {
    for (int a = 0; a <= 2; ++a) {
      TruncatedSeries inv = series_invert(
          independence_series(family_graph(FamilyKind::Cycle, n), n * a));
      std::vector<std::pair<int, int>> entries;
      for (int v = 1; v <= n; ++v) entries.emplace_back(v, a);
      CHECK(inv.coefficient(ExponentVector(entries)) ==
            Rational(cycle_diagonal_q1(n, a)));
    }
  }
}
