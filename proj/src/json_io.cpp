#include "chorn/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace chorn {

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [label, exp] : m.entries()) {
      exps.push_back({label, exp});
    }
    terms.push_back({{"m", exps}, {"value", format_rational(c)}});
  }
  return {{"degree_bound", s.degree_bound()}, {"terms", terms}};
}

std::string series_to_csv(const TruncatedSeries& s,
                          const std::vector<int>& window) {
  std::ostringstream out;
  for (int v : window) out << "x" << v << ",";
  out << "value\n";
  for (const auto& [m, c] : s.terms()) {
    for (int e : m.to_dense(window)) out << e << ",";
    out << format_rational(c) << "\n";
  }
  return out.str();
}

nlohmann::json qpolynomial_to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  if (p.is_zero()) coeffs.push_back("0");
  for (int k = 0; k <= p.degree(); ++k) {
    coeffs.push_back(format_rational(p.coeff(k)));
  }
  return {{"coeffs", coeffs}};
}

nlohmann::json verdict_to_json(const HornVerdict& v) {
  nlohmann::json rays = nlohmann::json::array();
  for (const auto& r : v.rays) {
    nlohmann::json entry = {{"ray", r.ray},
                            {"caps", {r.caps.num, r.caps.den}},
                            {"samples", r.sample_count},
                            {"status", r.status}};
    if (!r.fitted.empty()) entry["fit"] = r.fitted;
    if (!r.note.empty()) entry["note"] = r.note;
    rays.push_back(std::move(entry));
  }
  nlohmann::json evidence = {{"degree_bound", v.degree_bound},
                             {"caps", {v.caps.num, v.caps.den}},
                             {"rays", rays}};
  if (v.zero_witness) evidence["zero_witness"] = v.zero_witness->to_string();
  if (!v.failing_ray.empty()) evidence["failing_ray"] = v.failing_ray;
  return {{"graph", v.graph_id},
          {"q", v.q},
          {"status", to_string(v.status)},
          {"evidence", evidence}};
}

}  // namespace chorn
