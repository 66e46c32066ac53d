#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chorn/closed_forms.hpp"
#include "chorn/horn.hpp"
#include "chorn/series.hpp"

using namespace chorn;

namespace {

ExponentVector ev(std::vector<std::pair<int, int>> entries) {
  return ExponentVector(std::move(entries));
}

}  // namespace

TEST_CASE("coefficient_table") {
  CoefficientTable p2 = coefficient_table({FamilyKind::Path, 2, {}}, -1, {}, 2);
  CHECK(p2.entries.size() == 6);
  CHECK(p2.entries.at(ev({})) == 1);
  CHECK(p2.entries.at(ev({{1, 1}})) == -1);
  CHECK(p2.entries.at(ev({{2, 1}})) == -1);
  CHECK(p2.entries.at(ev({{1, 2}})) == 1);
  CHECK(p2.entries.at(ev({{1, 1}, {2, 1}})) == 2);
  CHECK(p2.entries.at(ev({{2, 2}})) == 1);

  CoefficientTable ind = coefficient_table({FamilyKind::Cycle, 4, {}}, 1, {}, 2);
  for (const auto& [m, c] : ind.entries) {
    CHECK((c == 0 || c == 1));
  }

  CoefficientTable c4 = coefficient_table({FamilyKind::Cycle, 4, {}}, -1, {}, 4);
  CHECK(c4.entries.at(ev({{1, 1}, {2, 1}, {3, 1}, {4, 1}})) == 14);
}

TEST_CASE("zero_scan") {
  CHECK(zero_scan(coefficient_table({FamilyKind::Cycle, 4, {}}, 1, {}, 4)) ==
        ev({{1, 1}, {2, 1}}));
  CHECK_FALSE(
      zero_scan(coefficient_table({FamilyKind::Path, 2, {}}, -1, {}, 4))
          .has_value());
  CHECK_FALSE(
      zero_scan(coefficient_table({FamilyKind::Complete, 3, {}}, -2, {}, 4))
          .has_value());
}

TEST_CASE("ratio_samples") {
  CoefficientTable p2 = coefficient_table({FamilyKind::Path, 2, {}}, -1, {}, 8);
  Ray ray{"m1", ev({{2, 1}}), ev({{1, 1}})};
  RatioReport report = ratio_samples(p2, ray, 6);
  REQUIRE(report.samples.size() == 6);
  CHECK(report.zero_denominators.empty());
  for (const auto& s : report.samples) {
    Rational a = s.params.at(0);
    CHECK(s.value == -(a + 2) / (a + 1));
  }

  CoefficientTable one = coefficient_table(
      {FamilyKind::Complete, 1, {}}, -1, {}, 6);
  RatioReport constant =
      ratio_samples(one, Ray{"m1", ev({}), ev({{1, 1}})}, 6);
  REQUIRE(constant.samples.size() == 6);
  for (const auto& s : constant.samples) CHECK(s.value == -1);

  CoefficientTable c4 = coefficient_table({FamilyKind::Cycle, 4, {}}, -1, {}, 12);
  RatioReport diag = ratio_samples(
      c4, Ray{"diag", ev({}), ev({{1, 1}, {2, 1}, {3, 1}, {4, 1}})}, 10);
  REQUIRE(diag.samples.size() == 3);
  CHECK(diag.samples[0].value == 14);
  CHECK(diag.samples[1].value == Rational(786) / 14);
  CHECK(diag.samples[2].value == Rational(61340) / 786);

  CHECK_THROWS_AS(ratio_samples(c4, Ray{"bad", ev({}), ev({})}, 3),
                  std::invalid_argument);
}

TEST_CASE("rational_fit recovers simple ratios") {
  std::vector<RatioSample> samples;
  for (long a = 0; a < 6; ++a) {
    samples.push_back({{Rational(a)}, -Rational(a + 2) / Rational(a + 1)});
  }
  auto fit = rational_fit(samples, FitCaps{1, 1});
  REQUIRE(fit.has_value());
  for (long a = 20; a < 25; ++a) {
    CHECK(fit->eval({Rational(a)}) == -Rational(a + 2) / Rational(a + 1));
  }

  std::vector<RatioSample> constant;
  for (long a = 0; a < 6; ++a) constant.push_back({{Rational(a)}, Rational(7)});
  auto cfit = rational_fit(constant, FitCaps{2, 2});
  REQUIRE(cfit.has_value());
  CHECK(cfit->eval({Rational(100)}) == 7);

  CHECK_THROWS_AS(rational_fit({{{Rational(0)}, Rational(1)}}, FitCaps{2, 2}),
                  std::invalid_argument);
}

TEST_CASE("rational_fit verification pass rejects non-rational data") {
  // C_4 diagonal ratios from the q=1 closed form, a = 0..9: the spec-level
  // refutation with caps (4,4) and 10 samples.
  std::vector<RatioSample> samples;
  for (long a = 0; a < 10; ++a) {
    samples.push_back({{Rational(a)},
                       Rational(cycle_diagonal_q1(4, a + 1)) /
                           Rational(cycle_diagonal_q1(4, a))});
  }
  CHECK_FALSE(rational_fit(samples, FitCaps{4, 4}).has_value());
}

TEST_CASE("whenever a fit returns it reproduces every sample") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatioSample> samples;
    for (long a = 0; a < 8; ++a) {
      samples.push_back({{Rational(a)}, Rational(num(rng), 3)});
    }
    auto fit = rational_fit(samples, FitCaps{2, 2});
    if (fit) {
      for (const auto& s : samples) CHECK(fit->eval(s.params) == s.value);
    }
  }
}

TEST_CASE("diagonal_coefficients") {
  Graph c5 = family_graph(FamilyKind::Cycle, 5);
  auto cyc = diagonal_coefficients(c5, 1, 3);
  REQUIRE(cyc.has_value());
  for (int a = 0; a < 3; ++a) {
    CHECK((*cyc)[static_cast<size_t>(a)] == Rational(cycle_diagonal_q1(5, a)));
  }

  Graph chorded = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
  for (long q = 1; q <= 2; ++q) {
    auto diag = diagonal_coefficients(chorded, q, 3);
    REQUIRE(diag.has_value());
    TruncatedSeries inv =
        series_int_power(independence_series(chorded, 8), -q);
    for (int a = 0; a < 3; ++a) {
      CHECK((*diag)[static_cast<size_t>(a)] ==
            inv.coefficient(ev({{1, a}, {2, a}, {3, a}, {4, a}})));
    }
  }

  // cycle with q = 2 goes through the symbolic cycle polynomial
  Graph c4 = family_graph(FamilyKind::Cycle, 4);
  auto deep = diagonal_coefficients(c4, 2, 3);
  REQUIRE(deep.has_value());
  TruncatedSeries inv2 = series_int_power(independence_series(c4, 8), -2);
  for (int a = 0; a < 3; ++a) {
    CHECK((*deep)[static_cast<size_t>(a)] ==
          inv2.coefficient(ev({{1, a}, {2, a}, {3, a}, {4, a}})));
  }

  Graph pendant = build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}});
  CHECK_FALSE(diagonal_coefficients(pendant, 1, 3).has_value());
}

TEST_CASE("horn_verdict endpoints") {
  HornOptions defaults;
  HornVerdict p4 = horn_verdict({FamilyKind::Path, 4, {}}, 1, {}, 8, defaults);
  CHECK(p4.status == HornVerdict::Status::HornConsistent);
  CHECK(p4.rays.front().ray == "diagonal");
  for (const auto& r : p4.rays) CHECK(r.status == "fit");

  HornOptions wide;
  wide.caps = {4, 4};
  HornVerdict c4 = horn_verdict({FamilyKind::Cycle, 4, {}}, 1, {}, 12, wide);
  CHECK(c4.status == HornVerdict::Status::RatioFitFailed);
  CHECK(c4.failing_ray == "diagonal");

  HornVerdict k3 = horn_verdict({FamilyKind::Complete, 3, {}}, 2, {}, 8,
                                defaults);
  CHECK(k3.status == HornVerdict::Status::HornConsistent);

  // a positive power has structural zeros
  HornOptions opts;
  CHECK_THROWS_AS(horn_verdict({FamilyKind::Cycle, 4, {}}, 0, {}, 4, opts),
                  std::invalid_argument);
}

TEST_CASE("horn_verdict is deterministic") {
  HornOptions opts;
  opts.caps = {4, 4};
  HornVerdict a = horn_verdict({FamilyKind::Cycle, 5, {}}, 1, {}, 12, opts);
  HornVerdict b = horn_verdict({FamilyKind::Cycle, 5, {}}, 1, {}, 12, opts);
  CHECK(a.status == b.status);
  REQUIRE(a.rays.size() == b.rays.size());
  for (size_t i = 0; i < a.rays.size(); ++i) {
    CHECK(a.rays[i].status == b.rays[i].status);
    CHECK(a.rays[i].fitted == b.rays[i].fitted);
  }
}

TEST_CASE("fitted chordal axis ratios match the closed form at random points") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> point(1, 500);
  Graph s4 = family_graph(FamilyKind::Star, 4);
  auto peo = find_peo(s4);
  REQUIRE(peo.has_value());
  CoefficientTable table = coefficient_table({FamilyKind::Star, 4, {}}, -1, {}, 8);
  // leaf axis with the center pinned: supp stays {1, 2}
  Ray ray{"pair", ev({{1, 1}}), ev({{2, 1}})};
  RatioReport report = ratio_samples(table, ray, 6);
  auto fit = rational_fit(report.samples, FitCaps{2, 2});
  REQUIRE(fit.has_value());
  for (int t = 0; t < 20; ++t) {
    int a = point(rng);
    ExponentVector lo = ev({{1, 1}, {2, a}});
    ExponentVector hi = lo.plus_unit(2);
    Rational expected = -peo_coefficient(s4, *peo, hi, Rational(1)) /
                        peo_coefficient(s4, *peo, lo, Rational(1));
    CHECK(fit->eval({Rational(a)}) == expected);
  }
}

TEST_CASE("zero witness short-circuits the verdict") {
  // Build a table with a forced zero by using power +1 internals: simplest
  // is to scan the q=1 table directly.
  CoefficientTable t = coefficient_table({FamilyKind::Path, 3, {}}, 1, {}, 3);
  auto witness = zero_scan(t);
  REQUIRE(witness.has_value());
  CHECK(witness == ev({{1, 1}, {2, 1}}));
}
