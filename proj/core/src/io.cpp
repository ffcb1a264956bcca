#include "hyperbound/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperbound/error.hpp"

namespace hyperbound {

namespace {

Rational rational_field(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational given as an integer or a string, got " + j.dump());
}

Integer integer_field(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

const nlohmann::json& member(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

CurveModel parse_curve(const nlohmann::json& j) {
  const auto& genus = member(j, "genus");
  const auto& coeffs = member(j, "coeffs");
  if (!genus.is_number_integer()) throw InputError("\"genus\" must be an integer");
  if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array");
  std::vector<Integer> desc;
  for (const auto& c : coeffs) desc.push_back(integer_field(c));
  return CurveModel(genus.get<int>(), std::move(desc));
}

nlohmann::ordered_json curve_to_json(const CurveModel& curve) {
  nlohmann::ordered_json j;
  j["genus"] = curve.genus();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : curve.coefficients()) {
    if (c.fits_slong_p()) {
      j["coeffs"].push_back(c.get_si());
    } else {
      j["coeffs"].push_back(c.get_str());
    }
  }
  return j;
}

std::vector<Polytope> parse_polytopes(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() ? member(j, "polytopes") : j;
  if (!list.is_array() || list.empty()) throw InputError("expected a nonempty array of polytopes");
  std::vector<Polytope> out;
  for (const auto& poly : list) {
    if (!poly.is_array() || poly.empty()) throw InputError("each polytope must be a nonempty array of points");
    std::vector<Vector> pts;
    for (const auto& pt : poly) {
      if (!pt.is_array() || pt.empty()) throw InputError("each point must be a nonempty array");
      Vector v;
      for (const auto& c : pt) v.push_back(rational_field(c));
      pts.push_back(std::move(v));
    }
    out.push_back(convex_hull(pts));
  }
  return out;
}

nlohmann::ordered_json polytope_to_json(const Polytope& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
    for (const auto& c : v) pt.push_back(to_string(c));
    j.push_back(std::move(pt));
  }
  return j;
}

ValuedSeries parse_series(const nlohmann::json& j) {
  const auto& nvars = member(j, "nvars");
  if (!nvars.is_number_integer() || nvars.get<long long>() < 1 || nvars.get<long long>() > 6) {
    throw InputError("\"nvars\" must be an integer between 1 and 6");
  }
  const auto d = nvars.get<std::size_t>();
  ValuedSeries out(d);
  const auto& terms = member(j, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const auto& u = member(t, "u");
    const auto& v = member(t, "v");
    if (!u.is_array()) throw InputError("\"u\" must be an array");
    Exponent e;
    for (const auto& x : u) {
      if (!x.is_number_integer()) throw InputError("exponents must be integers");
      e.push_back(x.get<int>());
    }
    ExtendedRational val;
    if (v.is_string()) {
      val = parse_extended_rational(v.get<std::string>());
    } else {
      val = rational_field(v);
    }
    if (e.size() == d && out.valuation(e)) throw InputError("repeated exponent in series");
    out.set(e, val);
  }
  return out;
}

nlohmann::ordered_json series_to_json(const ValuedSeries& f) {
  nlohmann::ordered_json j;
  j["nvars"] = f.nvars();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : f.terms()) j["terms"].push_back({{"u", u}, {"v", to_string(v)}});
  return j;
}

nlohmann::ordered_json to_json(const QuadraticPoint& point) {
  auto pair = [](const QuadraticElement& z) { return nlohmann::ordered_json::array({to_string(z.u()), to_string(z.v())}); };
  nlohmann::ordered_json j;
  j["disc"] = to_string(point.disc);
  j["x"] = pair(point.x);
  j["y"] = pair(point.y);
  return j;
}

nlohmann::ordered_json to_json(const FamilyVerification& record) {
  nlohmann::ordered_json j;
  j["genus"] = record.genus;
  j["f_mod3"] = record.polynomial;
  j["values_on_F3"] = record.values_on_f3;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : record.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["passed"] = record.passed;
  return j;
}

}  // namespace hyperbound
