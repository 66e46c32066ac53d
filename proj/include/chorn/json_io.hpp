#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chorn/horn.hpp"
#include "chorn/qpolynomial.hpp"
#include "chorn/series.hpp"

namespace chorn {

// {"degree_bound": D, "terms": [{"m": [[vertex, exp], ...], "value": "p/q"}]}
nlohmann::json series_to_json(const TruncatedSeries& s);
// One column per window vertex, then "value".
std::string series_to_csv(const TruncatedSeries& s,
                          const std::vector<int>& window);

// {"coeffs": ["p/q", ...]} ascending powers.
nlohmann::json qpolynomial_to_json(const QPolynomial& p);

// {"graph": ..., "q": ..., "status": ..., "evidence": {...}}
nlohmann::json verdict_to_json(const HornVerdict& v);

}  // namespace chorn
