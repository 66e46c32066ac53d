#include "chorn/horn.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "chorn/chromatic.hpp"
#include "chorn/closed_forms.hpp"
#include "chorn/errors.hpp"
#include "chorn/series.hpp"

namespace chorn {

namespace {

std::vector<int> resolve_window(const GraphFamily& family,
                                const std::vector<int>& window) {
  if (!window.empty()) return window;
  if (family.is_infinite()) {
    throw std::invalid_argument("infinite family needs a vertex window");
  }
  return materialize(family, {}).vertices();
}

void enumerate_exponents(const std::vector<int>& window, int degree_left,
                         size_t idx, std::vector<std::pair<int, int>>& acc,
                         const std::function<void(ExponentVector)>& fn) {
  if (idx == window.size()) {
    fn(ExponentVector(acc));
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    if (e > 0) acc.emplace_back(window[idx], e);
    enumerate_exponents(window, degree_left - e, idx + 1, acc, fn);
    if (e > 0) acc.pop_back();
  }
}

}  // namespace

CoefficientTable coefficient_table(const GraphFamily& family, long power,
                                   const std::vector<int>& window,
                                   int degree_bound) {
  CoefficientTable table;
  table.graph_id = family_to_string(family);
  table.power = power;
  table.degree_bound = degree_bound;
  table.window = resolve_window(family, window);

  Integer size = binomial_uint(
      static_cast<unsigned long>(table.window.size()) +
          static_cast<unsigned long>(degree_bound),
      static_cast<unsigned long>(degree_bound));
  if (size > Integer(static_cast<unsigned long>(enumeration_guard()))) {
    throw GuardError("coefficient table would hold " + size.get_str() +
                     " entries (guard " + std::to_string(enumeration_guard()) +
                     ")");
  }

  TruncatedSeries series =
      series_int_power(independence_series(family, table.window, degree_bound),
                       power);
  std::vector<std::pair<int, int>> acc;
  enumerate_exponents(table.window, degree_bound, 0, acc,
                      [&](ExponentVector m) {
                        Rational c = series.coefficient(m);
                        table.entries.emplace(std::move(m), std::move(c));
                      });
  return table;
}

std::optional<ExponentVector> zero_scan(const CoefficientTable& table) {
  for (const auto& [m, c] : table.entries) {
    if (c == 0) return m;
  }
  return std::nullopt;
}

RatioReport ratio_samples(const CoefficientTable& table, const Ray& ray,
                          int max_steps) {
  RatioReport report;
  int step_degree = ray.step.total_degree();
  if (step_degree == 0) {
    throw std::invalid_argument("ray step must have positive degree");
  }
  for (int a = 0; a < max_steps; ++a) {
    ExponentVector m = ray.base;
    for (int i = 0; i < a; ++i) m = m.plus(ray.step);
    if (m.total_degree() + step_degree > table.degree_bound) break;
    const Rational& denom = table.entries.at(m);
    if (denom == 0) {
      report.zero_denominators.push_back(m);
      continue;
    }
    const Rational& numer = table.entries.at(m.plus(ray.step));
    report.samples.push_back({{Rational(a)}, numer / denom});
  }
  return report;
}

long monomial_count(int dim, int cap) {
  return binomial_uint(static_cast<unsigned long>(dim + cap),
                       static_cast<unsigned long>(cap))
      .get_si();
}

long fit_dof(int dim, const FitCaps& caps) {
  return (monomial_count(dim, caps.num) - 1) +
         (monomial_count(dim, caps.den) - 1);
}

namespace {

// Monomial basis (exponent tuples) in graded-lex order.
std::vector<std::vector<int>> monomial_basis(int dim, int cap) {
  std::vector<std::vector<int>> basis;
  std::vector<int> current(static_cast<size_t>(dim), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == dim) {
      basis.push_back(current);
      return;
    }
    for (int e = left; e >= 0; --e) {
      current[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    current[static_cast<size_t>(pos)] = 0;
  };
  for (int d = 0; d <= cap; ++d) rec(rec, 0, d);
  return basis;
}

Rational eval_monomial(const std::vector<int>& exps,
                       const std::vector<Rational>& params) {
  Rational value(1);
  for (size_t i = 0; i < exps.size(); ++i) {
    for (int j = 0; j < exps[i]; ++j) value *= params[i];
  }
  return value;
}

Rational eval_poly(const std::vector<Rational>& coeffs,
                   const std::vector<std::vector<int>>& basis,
                   const std::vector<Rational>& params) {
  Rational value(0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) value += coeffs[i] * eval_monomial(basis[i], params);
  }
  return value;
}

std::string format_poly(const std::vector<Rational>& coeffs,
                        const std::vector<std::vector<int>>& basis, int dim) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Rational c = coeffs[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < dim; ++v) {
      int e = basis[i][static_cast<size_t>(v)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += dim == 1 ? "a" : "a" + std::to_string(v + 1);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << format_rational(c);
    } else {
      if (c != 1) out << format_rational(c) << "*";
      out << vars;
    }
  }
  if (first) out << "0";
  return out.str();
}

// Nullspace basis of the homogeneous system, via exact RREF.
std::vector<std::vector<Rational>> nullspace(
    std::vector<std::vector<Rational>> rows, size_t cols) {
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c];
    for (size_t j = c; j < cols; ++j) rows[r][j] /= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -rows[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Rational RationalFunctionFit::eval(const std::vector<Rational>& params) const {
  auto pb = monomial_basis(dim, caps.num);
  auto qb = monomial_basis(dim, caps.den);
  Rational d = eval_poly(den, qb, params);
  if (d == 0) throw std::domain_error("fitted denominator vanishes");
  return eval_poly(num, pb, params) / d;
}

std::string RationalFunctionFit::to_string() const {
  auto pb = monomial_basis(dim, caps.num);
  auto qb = monomial_basis(dim, caps.den);
  return "(" + format_poly(num, pb, dim) + ")/(" + format_poly(den, qb, dim) +
         ")";
}

std::optional<RationalFunctionFit> rational_fit(
    const std::vector<RatioSample>& samples, const FitCaps& caps) {
  if (samples.empty()) return std::nullopt;
  int dim = static_cast<int>(samples.front().params.size());
  for (const auto& s : samples) {
    if (static_cast<int>(s.params.size()) != dim) {
      throw std::invalid_argument("inconsistent sample dimensions");
    }
  }
  if (static_cast<long>(samples.size()) < fit_dof(dim, caps) + 2) {
    throw std::invalid_argument("need at least dof+2 samples for a fit");
  }

  auto pb = monomial_basis(dim, caps.num);
  auto qb = monomial_basis(dim, caps.den);
  size_t cols = pb.size() + qb.size();
  // P(x) - value * Q(x) = 0 per sample.
  std::vector<std::vector<Rational>> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    std::vector<Rational> row;
    row.reserve(cols);
    for (const auto& mono : pb) row.push_back(eval_monomial(mono, s.params));
    for (const auto& mono : qb) {
      row.push_back(-s.value * eval_monomial(mono, s.params));
    }
    rows.push_back(std::move(row));
  }

  auto basis = nullspace(std::move(rows), cols);
  // Each basis vector first, then the running sum: a valid fit needs a
  // denominator that is nonzero at every sample.
  std::vector<std::vector<Rational>> candidates = basis;
  if (basis.size() > 1) {
    std::vector<Rational> total(cols, Rational(0));
    for (const auto& v : basis) {
      for (size_t j = 0; j < cols; ++j) total[j] += v[j];
    }
    candidates.push_back(std::move(total));
  }
  for (const auto& v : candidates) {
    RationalFunctionFit fit;
    fit.dim = dim;
    fit.caps = caps;
    fit.num.assign(v.begin(), v.begin() + static_cast<long>(pb.size()));
    fit.den.assign(v.begin() + static_cast<long>(pb.size()), v.end());
    Rational lead(0);
    for (const auto& c : fit.den) {
      if (c != 0) {
        lead = c;
        break;
      }
    }
    if (lead == 0) continue;
    // Lowest terms: integer coefficients with unit content, first nonzero
    // denominator coefficient positive.
    Integer common_den(1), content(0);
    for (const auto& c : fit.num) common_den = lcm(common_den, c.get_den());
    for (const auto& c : fit.den) common_den = lcm(common_den, c.get_den());
    for (auto& c : fit.num) c *= common_den;
    for (auto& c : fit.den) c *= common_den;
    for (const auto& c : fit.num) content = gcd(content, c.get_num());
    for (const auto& c : fit.den) content = gcd(content, c.get_num());
    if (lead < 0) content = -content;
    for (auto& c : fit.num) c /= content;
    for (auto& c : fit.den) c /= content;
    bool ok = true;
    for (const auto& s : samples) {
      Rational d = eval_poly(fit.den, qb, s.params);
      if (d == 0 || eval_poly(fit.num, pb, s.params) != s.value * d) {
        ok = false;
        break;
      }
    }
    if (ok) return fit;
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> diagonal_coefficients(
    const Graph& window_graph, long q, int count) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  if (count < 0) throw std::invalid_argument("negative sample count");
  int n = window_graph.vertex_count();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(count));

  bool is_cycle = n >= 3;
  for (int v : window_graph.vertices()) {
    if (window_graph.neighbors(v).size() != 2) {
      is_cycle = false;
      break;
    }
  }
  if (is_cycle) {
    // Degree-2 everywhere plus connectivity means a single cycle.
    std::set<int> seen;
    std::vector<int> stack{window_graph.vertices().front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (int u : window_graph.neighbors(v)) stack.push_back(u);
    }
    is_cycle = static_cast<int>(seen.size()) == n;
  }

  if (is_cycle) {
    if (q == 1) {
      for (int a = 0; a < count; ++a) {
        out.emplace_back(cycle_diagonal_q1(n, a));
      }
      return out;
    }
    // Relabel the cycle consecutively so the cyclic formula applies.
    std::vector<int> order;
    order.push_back(window_graph.vertices().front());
    order.push_back(*window_graph.neighbors(order[0]).begin());
    while (static_cast<int>(order.size()) < n) {
      int v = order.back(), prev = order[order.size() - 2];
      for (int u : window_graph.neighbors(v)) {
        if (u != prev) {
          order.push_back(u);
          break;
        }
      }
    }
    for (int a = 0; a < count; ++a) {
      std::vector<std::pair<int, int>> entries;
      for (int i = 1; i <= n; ++i) entries.emplace_back(i, a);
      Rational value =
          read_cycle_chromatic(n, ExponentVector(std::move(entries)),
                               Rational(-q));
      out.push_back(std::move(value));
    }
    return out;
  }

  std::optional<PEOrdering> peo = find_peo(window_graph);
  if (!peo) return std::nullopt;
  for (int a = 0; a < count; ++a) {
    std::vector<std::pair<int, int>> entries;
    for (int v : window_graph.vertices()) entries.emplace_back(v, a);
    ExponentVector m(std::move(entries));
    Rational value = peo_coefficient(window_graph, *peo, m, Rational(q));
    if ((static_cast<long>(n) * a) % 2 != 0) value = -value;
    out.push_back(std::move(value));
  }
  return out;
}

namespace {

RayOutcome fit_ray(const std::string& name,
                   const std::vector<RatioSample>& samples,
                   const FitCaps& caps, const std::string& note) {
  RayOutcome outcome;
  outcome.ray = name;
  outcome.caps = caps;
  outcome.sample_count = static_cast<long>(samples.size());
  outcome.note = note;
  long needed = fit_dof(1, caps) + 2;
  if (outcome.sample_count < needed) {
    outcome.status = "skipped";
    outcome.note = note.empty()
                       ? "only " + std::to_string(samples.size()) +
                             " samples, need " + std::to_string(needed)
                       : note;
    return outcome;
  }
  auto fit = rational_fit(samples, caps);
  if (fit) {
    outcome.status = "fit";
    outcome.fitted = fit->to_string();
  } else {
    outcome.status = "no_fit";
  }
  return outcome;
}

}  // namespace

std::string to_string(HornVerdict::Status status) {
  switch (status) {
    case HornVerdict::Status::HornConsistent:
      return "horn_consistent";
    case HornVerdict::Status::ZeroCoefficientWitness:
      return "zero_coefficient_witness";
    case HornVerdict::Status::RatioFitFailed:
      return "ratio_fit_failed";
  }
  return "unknown";
}

HornVerdict horn_verdict(const GraphFamily& family, long q,
                         const std::vector<int>& window, int degree_bound,
                         const HornOptions& options) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  std::vector<int> w = resolve_window(family, window);
  CoefficientTable table = coefficient_table(family, -q, w, degree_bound);

  HornVerdict verdict;
  verdict.graph_id = table.graph_id;
  verdict.q = q;
  verdict.degree_bound = degree_bound;
  verdict.caps = options.caps;

  if (auto witness = zero_scan(table)) {
    verdict.status = HornVerdict::Status::ZeroCoefficientWitness;
    verdict.zero_witness = witness;
    return verdict;
  }

  Graph g = materialize(family, w);

  // Diagonal composite ray first. Its true ratio degree on well-behaved
  // graphs is n + |E|, so the caps widen to that; the sample budget then
  // exceeds what any total-degree table can hold, and the samples come from
  // a closed form instead.
  {
    int full = g.vertex_count() + g.edge_count();
    FitCaps diag_caps{std::max(options.caps.num, full),
                      std::max(options.caps.den, full)};
    long needed = fit_dof(1, diag_caps) + 2;
    long sample_count =
        options.diag_samples > 0 ? options.diag_samples : needed;
    std::vector<RatioSample> samples;
    std::string note;
    auto diag = diagonal_coefficients(g, q, static_cast<int>(sample_count) + 1);
    if (diag) {
      note = "closed-form samples";
      for (long a = 0; a + 1 < static_cast<long>(diag->size()); ++a) {
        const Rational& denom = (*diag)[static_cast<size_t>(a)];
        if (denom == 0) continue;
        samples.push_back(
            {{Rational(a)}, (*diag)[static_cast<size_t>(a) + 1] / denom});
      }
    } else {
      note = "table samples only (no closed form for this window graph)";
      Ray ray;
      ray.name = "diagonal";
      std::vector<std::pair<int, int>> step;
      for (int v : w) step.emplace_back(v, 1);
      ray.step = ExponentVector(std::move(step));
      RatioReport report =
          ratio_samples(table, ray, degree_bound / std::max(1, (int)w.size()));
      samples = report.samples;
    }
    RayOutcome outcome = fit_ray("diagonal", samples, diag_caps, note);
    verdict.rays.push_back(outcome);
    if (outcome.status == "no_fit") {
      verdict.status = HornVerdict::Status::RatioFitFailed;
      verdict.failing_ray = outcome.ray;
      return verdict;
    }
  }

  // Axis rays over supports of size <= 2: m = a e_i, then m = e_j + a e_i.
  std::vector<Ray> rays;
  for (int i : w) {
    Ray ray;
    ray.name = "axis:x" + std::to_string(i);
    ray.step = ExponentVector::unit(i);
    rays.push_back(std::move(ray));
  }
  for (int j : w) {
    for (int i : w) {
      if (i == j) continue;
      Ray ray;
      ray.name = "pair:x" + std::to_string(j) + "+a*x" + std::to_string(i);
      ray.base = ExponentVector::unit(j);
      ray.step = ExponentVector::unit(i);
      rays.push_back(std::move(ray));
    }
  }
  for (const Ray& ray : rays) {
    RatioReport report = ratio_samples(table, ray, options.ray_length);
    RayOutcome outcome = fit_ray(ray.name, report.samples, options.caps, "");
    verdict.rays.push_back(outcome);
    if (outcome.status == "no_fit") {
      verdict.status = HornVerdict::Status::RatioFitFailed;
      verdict.failing_ray = outcome.ray;
      return verdict;
    }
  }

  verdict.status = HornVerdict::Status::HornConsistent;
  return verdict;
}

}  // namespace chorn
