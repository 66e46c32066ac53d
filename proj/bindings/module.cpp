#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chorn/chromatic.hpp"
#include "chorn/closed_forms.hpp"
#include "chorn/errors.hpp"
#include "chorn/horn.hpp"
#include "chorn/json_io.hpp"
#include "chorn/series.hpp"

namespace py = pybind11;

namespace {

using namespace chorn;

// (vertex, exponent) pairs plus the coefficient as a "p/q" string; exact
// values cross the boundary as strings so nothing is ever rounded.
using Term = std::pair<std::vector<std::pair<int, int>>, std::string>;

std::vector<int> window_or_default(const GraphFamily& family,
                                   const std::vector<int>& window) {
  if (!window.empty()) return window;
  if (family.is_infinite()) {
    throw std::invalid_argument("infinite family needs a window");
  }
  return materialize(family, {}).vertices();
}

std::vector<Term> dump_series(const TruncatedSeries& s) {
  std::vector<Term> out;
  for (const auto& [m, c] : s.terms()) {
    out.emplace_back(m.entries(), format_rational(c));
  }
  return out;
}

std::vector<Term> py_power_series(const std::string& graph, long q, int maxdeg,
                                  const std::vector<int>& window) {
  GraphFamily family = parse_graph_spec(graph);
  std::vector<int> w = window_or_default(family, window);
  return dump_series(series_int_power(independence_series(family, w, maxdeg), q));
}

std::string py_power_coefficient(const std::string& graph, long q, int maxdeg,
                                 const std::vector<int>& coeff,
                                 const std::vector<int>& window) {
  GraphFamily family = parse_graph_spec(graph);
  std::vector<int> w = window_or_default(family, window);
  TruncatedSeries s =
      series_int_power(independence_series(family, w, maxdeg), q);
  return format_rational(s.coefficient(ExponentVector::from_dense(w, coeff)));
}

std::vector<std::string> dump_poly(const QPolynomial& p) {
  std::vector<std::string> out;
  if (p.is_zero()) return {"0"};
  for (int k = 0; k <= p.degree(); ++k) out.push_back(format_rational(p.coeff(k)));
  return out;
}

std::pair<Graph, ExponentVector> graph_and_exponent(
    const std::string& graph, const std::vector<int>& coeff,
    const std::vector<int>& window) {
  GraphFamily family = parse_graph_spec(graph);
  std::vector<int> w = window;
  if (w.empty() && family.is_infinite()) {
    for (size_t i = 0; i < coeff.size(); ++i) w.push_back(static_cast<int>(i) + 1);
  } else {
    w = window_or_default(family, window);
  }
  return {materialize(family, w), ExponentVector::from_dense(w, coeff)};
}

std::vector<std::string> py_chromatic(const std::string& graph,
                                      const std::vector<int>& coeff,
                                      const std::vector<int>& window) {
  auto [g, m] = graph_and_exponent(graph, coeff, window);
  return dump_poly(generalized_chromatic(g, m));
}

std::string py_chromatic_value(const std::string& graph,
                               const std::vector<int>& coeff, long q,
                               const std::vector<int>& window) {
  auto [g, m] = graph_and_exponent(graph, coeff, window);
  return format_rational(generalized_chromatic(g, m).eval(Rational(q)));
}

std::vector<std::string> py_closed_form(const std::string& graph,
                                        const std::vector<int>& coeff) {
  GraphFamily family = parse_graph_spec(graph);
  std::vector<int> labels(coeff.size());
  for (size_t i = 0; i < coeff.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  ExponentVector m = ExponentVector::from_dense(labels, coeff);
  QPolynomial pi = family.kind == FamilyKind::Cycle
                       ? read_cycle_polynomial(family.size, m)
                       : family_chromatic(family, m);
  return dump_poly(pi);
}

std::optional<std::vector<int>> py_find_peo(const std::string& graph,
                                            const std::vector<int>& window) {
  GraphFamily family = parse_graph_spec(graph);
  Graph g = materialize(family, window_or_default(family, window));
  auto peo = find_peo(g);
  if (!peo) return std::nullopt;
  return peo->order;
}

std::string py_peo_coefficient(const std::string& graph,
                               const std::vector<int>& coeff, long q,
                               const std::vector<int>& window) {
  auto [g, m] = graph_and_exponent(graph, coeff, window);
  auto peo = find_peo(g);
  if (!peo) throw std::invalid_argument("graph is not chordal");
  return format_rational(peo_coefficient(g, *peo, m, Rational(q)));
}

std::string py_cycle_diagonal_q1(int n, long a) {
  return cycle_diagonal_q1(n, a).get_str();
}

std::string py_horn(const std::string& graph, long q, int maxdeg,
                    const std::vector<int>& window,
                    const std::pair<int, int>& caps, int rays) {
  GraphFamily family = parse_graph_spec(graph);
  HornOptions options;
  options.caps = {caps.first, caps.second};
  options.ray_length = rays;
  return verdict_to_json(horn_verdict(family, q, window, maxdeg, options))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_chorn, mod) {
  mod.doc() = "exact independence-series, chromatic and Horn-ratio toolkit";

  py::register_exception<GuardError>(mod, "GuardError");
  py::register_exception<TruncationError>(mod, "TruncationError");

  mod.def("power_series", &py_power_series, py::arg("graph"), py::arg("q"),
          py::arg("maxdeg"), py::arg("window") = std::vector<int>{},
          "terms of I(graph, x)^q up to total degree maxdeg");
  mod.def("power_coefficient", &py_power_coefficient, py::arg("graph"),
          py::arg("q"), py::arg("maxdeg"), py::arg("coeff"),
          py::arg("window") = std::vector<int>{},
          "one coefficient of I(graph, x)^q; coeff is dense over the window");
  mod.def("chromatic", &py_chromatic, py::arg("graph"), py::arg("coeff"),
          py::arg("window") = std::vector<int>{},
          "generalized chromatic polynomial, ascending coefficients");
  mod.def("chromatic_value", &py_chromatic_value, py::arg("graph"),
          py::arg("coeff"), py::arg("q"),
          py::arg("window") = std::vector<int>{});
  mod.def("closed_form", &py_closed_form, py::arg("graph"), py::arg("coeff"),
          "family closed form (paths, stars, cliques, cycles)");
  mod.def("find_peo", &py_find_peo, py::arg("graph"),
          py::arg("window") = std::vector<int>{},
          "perfect elimination ordering, or None when not chordal");
  mod.def("peo_coefficient", &py_peo_coefficient, py::arg("graph"),
          py::arg("coeff"), py::arg("q"),
          py::arg("window") = std::vector<int>{});
  mod.def("cycle_diagonal_q1", &py_cycle_diagonal_q1, py::arg("n"),
          py::arg("a"));
  mod.def("horn", &py_horn, py::arg("graph"), py::arg("q"), py::arg("maxdeg"),
          py::arg("window") = std::vector<int>{},
          py::arg("caps") = std::pair<int, int>{2, 2}, py::arg("rays") = 6,
          "bounded-evidence Horn verdict as a JSON string");
}
