#include "chorn/series.hpp"

#include <stdexcept>

#include "chorn/errors.hpp"

namespace chorn {

TruncatedSeries::TruncatedSeries(int degree_bound) : bound_(degree_bound) {
  if (degree_bound < 0) {
    throw std::invalid_argument("negative degree bound");
  }
}

TruncatedSeries TruncatedSeries::one(int degree_bound) {
  TruncatedSeries s(degree_bound);
  s.set(ExponentVector(), Rational(1));
  return s;
}

Rational TruncatedSeries::constant_term() const {
  return coefficient(ExponentVector());
}

Rational TruncatedSeries::coefficient(const ExponentVector& m) const {
  if (m.total_degree() > bound_) {
    throw TruncationError("coefficient of " + m.to_string() +
                          " is above the truncation bound " +
                          std::to_string(bound_) + " (unknown, not zero)");
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set(const ExponentVector& m, const Rational& value) {
  if (m.total_degree() > bound_) {
    throw std::invalid_argument("term above the truncation bound");
  }
  if (value == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = value;
  }
}

void TruncatedSeries::add(const ExponentVector& m, const Rational& value) {
  if (m.total_degree() > bound_) {
    throw std::invalid_argument("term above the truncation bound");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (value != 0) terms_.emplace(m, value);
    return;
  }
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

namespace {

void enumerate_independent(const Graph& g, const std::vector<int>& vertices,
                           size_t start, std::vector<int>& current,
                           int max_size, TruncatedSeries& out) {
  {
    std::vector<std::pair<int, int>> entries;
    entries.reserve(current.size());
    for (int v : current) entries.emplace_back(v, 1);
    out.add(ExponentVector(std::move(entries)), Rational(1));
  }
  if (static_cast<int>(current.size()) == max_size) return;
  for (size_t i = start; i < vertices.size(); ++i) {
    int v = vertices[i];
    bool ok = true;
    for (int u : current) {
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    enumerate_independent(g, vertices, i + 1, current, max_size, out);
    current.pop_back();
  }
}

}  // namespace

TruncatedSeries independence_series(const Graph& g, int degree_bound) {
  TruncatedSeries out(degree_bound);
  std::vector<int> current;
  enumerate_independent(g, g.vertices(), 0, current, degree_bound, out);
  return out;
}

TruncatedSeries independence_series(const GraphFamily& family,
                                    const std::vector<int>& window,
                                    int degree_bound) {
  return independence_series(materialize(family, window), degree_bound);
}

TruncatedSeries series_multiply(const TruncatedSeries& a,
                                const TruncatedSeries& b) {
  if (a.degree_bound() != b.degree_bound()) {
    throw std::invalid_argument("degree bound mismatch: " +
                                std::to_string(a.degree_bound()) + " vs " +
                                std::to_string(b.degree_bound()));
  }
  TruncatedSeries out(a.degree_bound());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.total_degree() + mb.total_degree() > out.degree_bound()) continue;
      out.add(ma.plus(mb), ca * cb);
    }
  }
  return out;
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  Rational c0 = s.constant_term();
  if (c0 == 0) {
    throw std::invalid_argument("series with zero constant term has no inverse");
  }
  const int bound = s.degree_bound();
  // Normalized positive-degree part, grouped for the graded recursion.
  std::vector<std::pair<ExponentVector, Rational>> tail;
  for (const auto& [m, c] : s.terms()) {
    if (m.total_degree() > 0) tail.emplace_back(m, c / c0);
  }
  // t_0 = 1; t_d = -sum_{e>=1} s_e * t_{d-e}, layer by layer.
  std::vector<std::map<ExponentVector, Rational>> layers(
      static_cast<size_t>(bound) + 1);
  layers[0][ExponentVector()] = Rational(1);
  for (int d = 1; d <= bound; ++d) {
    auto& layer = layers[static_cast<size_t>(d)];
    for (const auto& [ms, cs] : tail) {
      int e = ms.total_degree();
      if (e > d) continue;
      for (const auto& [mt, ct] : layers[static_cast<size_t>(d - e)]) {
        Rational contrib = -(cs * ct);
        auto [it, inserted] = layer.emplace(ms.plus(mt), contrib);
        if (!inserted) it->second += contrib;
      }
    }
  }
  TruncatedSeries out(bound);
  for (const auto& layer : layers) {
    for (const auto& [m, c] : layer) {
      if (c != 0) out.set(m, c / c0);
    }
  }
  return out;
}

TruncatedSeries series_int_power(const TruncatedSeries& s, long q) {
  if (q == 0) return TruncatedSeries::one(s.degree_bound());
  TruncatedSeries base = q > 0 ? s : series_invert(s);
  long reps = q > 0 ? q : -q;
  TruncatedSeries out = base;
  for (long i = 1; i < reps; ++i) out = series_multiply(out, base);
  return out;
}

std::vector<Rational> one_variable_collapse(const TruncatedSeries& s) {
  std::vector<Rational> out(static_cast<size_t>(s.degree_bound()) + 1,
                            Rational(0));
  for (const auto& [m, c] : s.terms()) {
    out[static_cast<size_t>(m.total_degree())] += c;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace chorn
