#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chorn/chromatic.hpp"
#include "chorn/closed_forms.hpp"
#include "chorn/errors.hpp"
#include "chorn/horn.hpp"
#include "chorn/json_io.hpp"
#include "chorn/series.hpp"

namespace {

using namespace chorn;

std::vector<int> parse_int_csv(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) {
      throw std::invalid_argument("bad integer list: '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

// Window precedence: explicit flag, else the family's own vertices, else
// 1..fallback for infinite families.
std::vector<int> resolve_window(const GraphFamily& family,
                                const std::string& window_flag,
                                int fallback = 0) {
  if (!window_flag.empty()) return parse_int_csv(window_flag);
  if (!family.is_infinite()) return materialize(family, {}).vertices();
  if (fallback > 0) {
    std::vector<int> w(static_cast<size_t>(fallback));
    for (int i = 0; i < fallback; ++i) w[static_cast<size_t>(i)] = i + 1;
    return w;
  }
  throw std::invalid_argument("infinite family needs --window");
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

int run_series(const std::string& graph_spec, int maxdeg,
               const std::string& window_flag, const std::string& format) {
  GraphFamily family = parse_graph_spec(graph_spec);
  std::vector<int> window = resolve_window(family, window_flag);
  TruncatedSeries s = independence_series(family, window, maxdeg);
  if (format == "csv") {
    std::cout << series_to_csv(s, window);
  } else {
    emit(series_to_json(s));
  }
  return 0;
}

int run_power(const std::string& graph_spec, long q, int maxdeg,
              const std::string& coeff_flag, const std::string& window_flag,
              const std::string& format) {
  GraphFamily family = parse_graph_spec(graph_spec);
  std::vector<int> window = resolve_window(family, window_flag);
  TruncatedSeries s =
      series_int_power(independence_series(family, window, maxdeg), q);
  if (!coeff_flag.empty()) {
    ExponentVector m =
        ExponentVector::from_dense(window, parse_int_csv(coeff_flag));
    emit({{"value", format_rational(s.coefficient(m))}});
    return 0;
  }
  if (format == "csv") {
    std::cout << series_to_csv(s, window);
  } else {
    emit(series_to_json(s));
  }
  return 0;
}

int run_chromatic(const std::string& graph_spec, const std::string& coeff_flag,
                  const std::string& window_flag, bool has_q, long q) {
  GraphFamily family = parse_graph_spec(graph_spec);
  std::vector<int> coeffs = parse_int_csv(coeff_flag);
  std::vector<int> window =
      resolve_window(family, window_flag, static_cast<int>(coeffs.size()));
  Graph g = materialize(family, window);
  ExponentVector m = ExponentVector::from_dense(window, coeffs);
  QPolynomial pi = generalized_chromatic(g, m);
  if (has_q) {
    emit({{"value", format_rational(pi.eval(Rational(q)))}});
  } else {
    emit(qpolynomial_to_json(pi));
  }
  return 0;
}

int run_peo(const std::string& graph_spec, const std::string& window_flag) {
  GraphFamily family = parse_graph_spec(graph_spec);
  Graph g = materialize(family, resolve_window(family, window_flag));
  auto peo = find_peo(g);
  if (peo) {
    emit({{"peo", peo->order}});
  } else {
    emit({{"peo", nullptr}});
  }
  return 0;
}

int run_closed_form(const std::string& graph_spec,
                    const std::string& coeff_flag, bool has_q, long q) {
  GraphFamily family = parse_graph_spec(graph_spec);
  std::vector<int> coeffs = parse_int_csv(coeff_flag);
  std::vector<int> labels(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  ExponentVector m = ExponentVector::from_dense(labels, coeffs);
  QPolynomial pi = family.kind == FamilyKind::Cycle
                       ? read_cycle_polynomial(family.size, m)
                       : family_chromatic(family, m);
  if (has_q) {
    emit({{"value", format_rational(pi.eval(Rational(q)))}});
  } else {
    emit(qpolynomial_to_json(pi));
  }
  return 0;
}

int run_horn(const std::string& graph_spec, long q, int maxdeg,
             const std::string& window_flag, const std::string& caps_flag,
             int rays) {
  GraphFamily family = parse_graph_spec(graph_spec);
  std::vector<int> window = resolve_window(family, window_flag);
  HornOptions options;
  if (!caps_flag.empty()) {
    std::vector<int> caps = parse_int_csv(caps_flag);
    if (caps.size() != 2 || caps[0] < 0 || caps[1] < 0) {
      throw std::invalid_argument("--caps wants two non-negative integers");
    }
    options.caps = {caps[0], caps[1]};
  }
  options.ray_length = rays;
  emit(verdict_to_json(horn_verdict(family, q, window, maxdeg, options)));
  return 0;
}

// ---- verification suites -------------------------------------------------

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
};

void check(SuiteResult& r, bool ok) { (ok ? r.passed : r.failed) += 1; }

std::vector<GraphFamily> finite_families(int max_n) {
  std::vector<GraphFamily> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back({FamilyKind::Path, n, {}});
    out.push_back({FamilyKind::Star, n, {}});
    out.push_back({FamilyKind::Complete, n, {}});
    if (n >= 3) out.push_back({FamilyKind::Cycle, n, {}});
  }
  return out;
}

// Every m over `vertices` with total degree <= bound.
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

SuiteResult suite_inversion(int max_n) {
  SuiteResult r{"inversion"};
  for (const auto& family : finite_families(max_n)) {
    TruncatedSeries s = independence_series(family, {}, 6);
    check(r, series_multiply(s, series_invert(s)) == TruncatedSeries::one(6));
    check(r, series_int_power(s, -2) ==
                 series_invert(series_multiply(s, s)));
  }
  return r;
}

SuiteResult suite_bridge(int max_n) {
  SuiteResult r{"bridge"};
  for (const auto& family : finite_families(std::min(max_n, 5))) {
    Graph g = materialize(family, {});
    TruncatedSeries base = independence_series(g, 3);
    for (long q = -2; q <= 2; ++q) {
      TruncatedSeries power = series_int_power(base, q);
      for (const auto& m : all_exponents(g.vertices(), 3)) {
        check(r, power.coefficient(m) ==
                     generalized_chromatic(g, m).eval(Rational(q)));
      }
    }
  }
  return r;
}

SuiteResult suite_chordality(int max_n) {
  SuiteResult r{"chordality"};
  int n = std::min(max_n, 5);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    }
    Graph g = build_graph(n, edges);
    auto peo = find_peo(g);
    bool chordal = is_chordal_bruteforce(g);
    check(r, peo.has_value() == chordal);
    if (peo) check(r, verify_peo(g, peo->order));
  }
  return r;
}

SuiteResult suite_closed_forms(int max_n) {
  SuiteResult r{"closed_forms"};
  for (const auto& family : finite_families(std::min(max_n, 5))) {
    Graph g = materialize(family, {});
    for (const auto& m : all_exponents(g.vertices(), 4)) {
      bool small_entries = true;
      for (const auto& [v, e] : m.entries()) small_entries &= e <= 2;
      if (!small_entries) continue;
      QPolynomial expected = generalized_chromatic(g, m);
      if (family.kind == FamilyKind::Cycle) {
        check(r, read_cycle_polynomial(family.size, m) == expected);
      } else {
        check(r, family_chromatic(family, m) == expected);
      }
    }
  }
  return r;
}

SuiteResult suite_collapse() {
  SuiteResult r{"collapse"};
  auto collapse = [](FamilyKind kind, int n) {
    return one_variable_collapse(
        independence_series(family_graph(kind, n), n));
  };
  auto recurses = [](const std::vector<Rational>& whole,
                     const std::vector<Rational>& a,
                     const std::vector<Rational>& b) {
    std::vector<Rational> combined = a;
    combined.resize(std::max(a.size(), b.size() + 1), Rational(0));
    for (size_t k = 0; k < b.size(); ++k) combined[k + 1] += b[k];
    while (combined.size() > 1 && combined.back() == 0) combined.pop_back();
    return combined == whole;
  };
  check(r, collapse(FamilyKind::Cycle, 3) ==
               std::vector<Rational>({Rational(1), Rational(3)}));
  check(r, collapse(FamilyKind::Cycle, 4) ==
               std::vector<Rational>({Rational(1), Rational(4), Rational(2)}));
  check(r, collapse(FamilyKind::Path, 2) ==
               std::vector<Rational>({Rational(1), Rational(2)}));
  for (int n = 3; n <= 10; ++n) {
    check(r, recurses(collapse(FamilyKind::Path, n),
                      collapse(FamilyKind::Path, n - 1),
                      collapse(FamilyKind::Path, n - 2)));
  }
  for (int n = 5; n <= 10; ++n) {
    check(r, recurses(collapse(FamilyKind::Cycle, n),
                      collapse(FamilyKind::Cycle, n - 1),
                      collapse(FamilyKind::Cycle, n - 2)));
  }
  return r;
}

SuiteResult suite_horn_ratios(int max_n, unsigned seed) {
  SuiteResult r{"horn_ratios"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> point(1, 1000);
  // Fitted axis ratios must match the PEO-derived closed form at random
  // integer points.
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    for (FamilyKind kind :
         {FamilyKind::Path, FamilyKind::Star, FamilyKind::Complete}) {
      Graph g = family_graph(kind, n);
      GraphFamily family{kind, n, {}};
      CoefficientTable table = coefficient_table(family, -1, {}, 8);
      Ray ray{"axis", ExponentVector(), ExponentVector::unit(n)};
      RatioReport report = ratio_samples(table, ray, 6);
      auto fit = rational_fit(report.samples, FitCaps{2, 2});
      if (!fit) {
        check(r, false);
        continue;
      }
      auto peo = find_peo(g);
      for (int t = 0; t < 20; ++t) {
        Rational a(point(rng));
        // c_{(a+1) e_n} / c_{a e_n} for q=1 from the product formula.
        ExponentVector lo({{n, static_cast<int>(a.get_num().get_si())}});
        ExponentVector hi = lo.plus_unit(n);
        Rational expected = -peo_coefficient(g, *peo, hi, Rational(1)) /
                            peo_coefficient(g, *peo, lo, Rational(1));
        check(r, fit->eval({a}) == expected);
      }
    }
  }
  return r;
}

int run_verify(const std::string& suite, int max_n, unsigned seed) {
  std::vector<SuiteResult> results;
  bool all = suite == "all";
  if (all || suite == "inversion") results.push_back(suite_inversion(max_n));
  if (all || suite == "bridge") results.push_back(suite_bridge(max_n));
  if (all || suite == "chordality") results.push_back(suite_chordality(max_n));
  if (all || suite == "closed_forms") {
    results.push_back(suite_closed_forms(max_n));
  }
  if (all || suite == "collapse") results.push_back(suite_collapse());
  if (all || suite == "horn_ratios") {
    results.push_back(suite_horn_ratios(max_n, seed));
  }
  if (results.empty()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.name << ": " << r.passed << " passed, " << r.failed
              << " failed\n";
    ok = ok && r.failed == 0;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chorn: exact independence-series, chromatic and Horn-ratio toolkit"};
  app.require_subcommand(1);

  std::string graph_spec, window_flag, coeff_flag, caps_flag;
  std::string format = "json";
  std::string suite = "all";
  long q = 1;
  int maxdeg = 0, rays = 6, max_n = 5;
  unsigned seed = 0;

  auto* series = app.add_subcommand("series", "independence series I(G,x)");
  series->add_option("--graph", graph_spec)->required();
  series->add_option("--maxdeg", maxdeg)->required();
  series->add_option("--window", window_flag);
  series->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  auto* power = app.add_subcommand("power", "I(G,x)^q, any integer q");
  power->add_option("--graph", graph_spec)->required();
  power->add_option("--q", q)->required();
  power->add_option("--maxdeg", maxdeg)->required();
  power->add_option("--coeff", coeff_flag);
  power->add_option("--window", window_flag);
  power->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* chromatic =
      app.add_subcommand("chromatic", "generalized chromatic polynomial");
  chromatic->add_option("--graph", graph_spec)->required();
  auto* chromatic_coeff = chromatic->add_option("--coeff", coeff_flag);
  chromatic_coeff->required();
  auto* chromatic_q = chromatic->add_option("--q", q);
  chromatic->add_option("--window", window_flag);

  auto* peo = app.add_subcommand("peo", "perfect elimination ordering");
  peo->add_option("--graph", graph_spec)->required();
  peo->add_option("--window", window_flag);

  auto* closed =
      app.add_subcommand("closed-form", "family closed-form polynomial");
  closed->add_option("--graph", graph_spec)->required();
  closed->add_option("--coeff", coeff_flag)->required();
  auto* closed_q = closed->add_option("--q", q);

  auto* horn = app.add_subcommand("horn", "bounded-evidence Horn analysis");
  horn->add_option("--graph", graph_spec)->required();
  horn->add_option("--q", q);
  horn->add_option("--maxdeg", maxdeg)->required();
  horn->add_option("--window", window_flag);
  horn->add_option("--caps", caps_flag);
  horn->add_option("--rays", rays);

  auto* verify = app.add_subcommand("verify", "cross-module invariant suites");
  verify->add_option("suite", suite);
  verify->add_option("--max-n", max_n);
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (series->parsed()) {
      return run_series(graph_spec, maxdeg, window_flag, format);
    }
    if (power->parsed()) {
      return run_power(graph_spec, q, maxdeg, coeff_flag, window_flag, format);
    }
    if (chromatic->parsed()) {
      return run_chromatic(graph_spec, coeff_flag, window_flag,
                           chromatic_q->count() > 0, q);
    }
    if (peo->parsed()) return run_peo(graph_spec, window_flag);
    if (closed->parsed()) {
      return run_closed_form(graph_spec, coeff_flag, closed_q->count() > 0, q);
    }
    if (horn->parsed()) {
      return run_horn(graph_spec, q, maxdeg, window_flag, caps_flag, rays);
    }
    if (verify->parsed()) return run_verify(suite, max_n, seed);
  } catch (const GuardError& e) {
    std::cerr << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 1;
  }
  return 1;
}
