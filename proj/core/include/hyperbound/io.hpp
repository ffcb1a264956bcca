#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperbound/curve.hpp"
#include "hyperbound/family.hpp"
#include "hyperbound/polytope.hpp"
#include "hyperbound/valued_series.hpp"

namespace hyperbound {

// Reads and parses a JSON file; throws InputError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

// {"genus": g, "coeffs": [c_{2g+1}, ..., c_0]}; entries may be integers or
// decimal strings.
CurveModel parse_curve(const nlohmann::json& j);
nlohmann::ordered_json curve_to_json(const CurveModel& curve);

// [[point, ...], ...] or {"polytopes": [...]}, each point an array of
// rationals given as strings ("1/2") or integers.
std::vector<Polytope> parse_polytopes(const nlohmann::json& j);
nlohmann::ordered_json polytope_to_json(const Polytope& p);

// {"nvars": d, "terms": [{"u": [...], "v": "rational-or-inf"}, ...]}.
// The support is taken as complete.
ValuedSeries parse_series(const nlohmann::json& j);
nlohmann::ordered_json series_to_json(const ValuedSeries& f);

nlohmann::ordered_json to_json(const QuadraticPoint& point);
nlohmann::ordered_json to_json(const FamilyVerification& record);

}  // namespace hyperbound
