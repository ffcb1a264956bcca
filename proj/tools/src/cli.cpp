#include "hyperbound/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperbound/bound_engine.hpp"
#include "hyperbound/curve.hpp"
#include "hyperbound/error.hpp"
#include "hyperbound/family.hpp"
#include "hyperbound/finite_field.hpp"
#include "hyperbound/io.hpp"
#include "hyperbound/point_count.hpp"
#include "hyperbound/polytope.hpp"
#include "hyperbound/valued_series.hpp"

namespace hyperbound::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  bool pretty = false;
};

Json envelope(const std::string& command, Json inputs, Json result) {
  Json j;
  j["command"] = command;
  j["version"] = HYPERBOUND_VERSION;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  return j;
}

void emit(Context& ctx, const Json& j, const std::function<void(std::ostream&)>& summary = {}) {
  if (ctx.pretty && summary) {
    summary(ctx.out);
  } else if (ctx.pretty) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << j.dump() << '\n';
  }
}

Hypotheses parse_assumptions(const std::string& text) {
  Hypotheses h;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    if (token == "rank1") {
      h.rank_le_1 = true;
    } else if (token == "simple") {
      h.geometrically_simple = true;
    } else if (token == "dagger") {
      h.condition_dagger = true;
    } else {
      throw InputError("unknown assumption '" + token + "' (expected rank1, simple, dagger)");
    }
  }
  return h;
}

void curve_info(Context& ctx, const std::string& file, std::uint64_t prime_bound) {
  const CurveModel curve = parse_curve(read_json_file(file));
  Json r;
  r["curve"] = curve_to_json(curve);
  r["polynomial"] = curve.to_string();
  r["depressed"] = curve.depressed();
  r["discriminant"] = to_string(curve.discriminant());
  if (curve.depressed()) {
    const Height h = height(curve);
    std::ostringstream approx;
    approx.precision(6);
    approx << std::fixed << h.approx();
    r["height"] = {{"magnitude", to_string(h.magnitude)}, {"index", h.index}, {"approx", approx.str()}};
    const Minimality m = is_minimal(curve);
    r["minimal"] = m.minimal;
    r["minimality_witness"] = m.witness ? Json(*m.witness) : Json(nullptr);
  } else {
    r["height"] = nullptr;
    r["minimal"] = nullptr;
    r["minimality_witness"] = nullptr;
  }
  Json good = Json::array();
  for (std::uint64_t p = 3; p <= prime_bound; p += 2) {
    if (is_prime(p) && good_reduction(curve, p)) good.push_back(p);
  }
  r["good_primes"] = std::move(good);
  emit(ctx, envelope("curve info", {{"file", file}, {"prime_bound", prime_bound}}, std::move(r)));
}

void curve_count(Context& ctx, const std::string& file, std::uint32_t p, unsigned m) {
  const CurveModel curve = parse_curve(read_json_file(file));
  if (!is_prime(p)) throw InputError("--p must be prime");
  if (m < 1) throw InputError("--m must be positive");
  const FpPolynomial fbar = reduce_mod(curve, p);
  const FFContext field(p, m);
  const auto pts = affine_points(fbar, field);
  Json orbit_sizes = Json::array();
  for (const auto& orbit : frobenius_orbits(pts, field)) orbit_sizes.push_back(orbit.size());
  Json r;
  r["modulus"] = field.modulus().to_string();
  r["affine_points"] = pts.size();
  r["total_points"] = pts.size() + 1;
  r["orbit_sizes"] = std::move(orbit_sizes);
  emit(ctx, envelope("curve count", {{"file", file}, {"p", p}, {"m", m}}, std::move(r)));
}

void curve_search(Context& ctx, const std::string& file, long bound) {
  const CurveModel curve = parse_curve(read_json_file(file));
  if (bound < 1) throw InputError("--bound must be positive");
  Json pts = Json::array();
  for (const auto& pt : search_quadratic_points(curve, bound)) pts.push_back(to_json(pt));
  Json r;
  r["count"] = pts.size();
  r["points"] = std::move(pts);
  emit(ctx, envelope("curve search-quadratic", {{"file", file}, {"bound", bound}}, std::move(r)));
}

void polytope_mv(Context& ctx, const std::string& file) {
  const auto polys = parse_polytopes(read_json_file(file));
  const Rational mv = mixed_volume(polys);
  Json vertices = Json::array();
  for (const auto& p : polys) vertices.push_back(polytope_to_json(p));
  Json r;
  r["dimension"] = polys.front().ambient_dim();
  r["vertices"] = std::move(vertices);
  r["mixed_volume"] = to_string(mv);
  emit(ctx, envelope("polytope mv", {{"file", file}}, std::move(r)),
       [&](std::ostream& os) { os << "mixed volume: " << to_string(mv) << '\n'; });
}

void series_newton(Context& ctx, const std::string& file, const std::string& m_text) {
  const ValuedSeries f = parse_series(read_json_file(file));
  const Rational m = parse_rational(m_text);
  if (m <= 0) throw InputError("--m must be positive");
  const auto exps = newton_exponents(f, m);
  const Polytope poly = newton_polygon(f, m);
  Json r;
  r["exponents"] = exps;
  r["vertices"] = polytope_to_json(poly);
  r["empty"] = poly.empty();
  emit(ctx, envelope("series newton", {{"file", file}, {"m", to_string(m)}}, std::move(r)));
}

void print_report(std::ostream& os, const BoundReport& report) {
  os << report.curve << "\n"
     << "degree " << report.d << " points, p = " << report.p << ", method " << report.method << "\n";
  for (const auto& h : report.hypotheses) os << "  assumes " << h << "\n";
  for (const auto& c : report.configurations) {
    os << "  " << c.label << ": " << to_string(c.ordered_count) << " ordered / " << c.stabilizer << " -> "
       << to_string(c.unordered_count) << "\n";
  }
  os << "tuple bound " << to_string(report.tuple_bound) << ", point bound " << to_string(report.point_bound) << "\n";
}

void bound(Context& ctx, const std::string& kind, const std::string& file, const std::string& assume, int d,
           std::optional<std::uint64_t> prime, std::optional<int> budget, bool refined) {
  const CurveModel curve = parse_curve(read_json_file(file));
  const Hypotheses h = parse_assumptions(assume);
  PipelineOptions options;
  options.budget = budget;
  options.prime = prime;
  options.refined = refined;
  BoundReport report;
  if (kind == "quadratic") {
    report = quadratic_pipeline(curve, h, options);
  } else if (kind == "cubic") {
    report = cubic_pipeline(curve, h, options);
  } else {
    report = generic_pipeline(d, curve, h, options);
  }
  Json inputs{{"file", file}, {"assume", assume}};
  if (kind == "generic") inputs["d"] = d;
  if (prime) inputs["p"] = *prime;
  if (budget) inputs["budget"] = *budget;
  if (refined) inputs["refined"] = true;
  emit(ctx, envelope("bound " + kind, std::move(inputs), to_json(report)),
       [&](std::ostream& os) { print_report(os, report); });
}

void family_verify(Context& ctx, int g_min, int g_max) {
  if (g_min < 3 || g_max < g_min) throw InputError("need 3 <= --g-min <= --g-max");
  if (g_max > 5000) throw InputError("--g-max is limited to 5000");
  std::vector<FamilyVerification> records;
  Json arr = Json::array();
  for (int g = g_min; g <= g_max; ++g) {
    records.push_back(verify_family_member(build_family_member(g)));
    arr.push_back(to_json(records.back()));
  }
  emit(ctx, envelope("family verify", {{"g_min", g_min}, {"g_max", g_max}}, std::move(arr)), [&](std::ostream& os) {
    for (const auto& r : records) {
      os << "g=" << r.genus << " " << (r.passed ? "pass" : "FAIL") << "  " << r.polynomial << "\n";
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for degree-d point bounds on hyperelliptic curves", "hyperbound"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out};
  app.add_flag("--pretty", ctx.pretty, "Human-readable output instead of JSON");
  app.set_version_flag("--version", HYPERBOUND_VERSION);

  std::function<void()> action;
  std::string file;

  auto* curve = app.add_subcommand("curve", "Curve data: height, reduction, point counts, quadratic points");
  curve->require_subcommand(1);
  std::uint64_t prime_bound = 50;
  auto* info = curve->add_subcommand("info", "Height, minimality, discriminant and good primes");
  info->add_option("file", file, "Curve JSON file")->required();
  info->add_option("--prime-bound", prime_bound, "List good odd primes up to this bound")->capture_default_str();
  info->callback([&] { action = [&] { curve_info(ctx, file, prime_bound); }; });

  std::uint32_t count_p = 3;
  unsigned count_m = 1;
  auto* count = curve->add_subcommand("count", "Points over F_{p^m}");
  count->add_option("file", file, "Curve JSON file")->required();
  count->add_option("--p", count_p, "Odd prime")->required();
  count->add_option("--m", count_m, "Extension degree")->capture_default_str();
  count->callback([&] { action = [&] { curve_count(ctx, file, count_p, count_m); }; });

  long search_bound = 10;
  auto* search = curve->add_subcommand("search-quadratic", "Brute-force search for quadratic points");
  search->add_option("file", file, "Curve JSON file")->required();
  search->add_option("--bound", search_bound, "Search bound on |D|, |a|, |b|, c")->required();
  search->callback([&] { action = [&] { curve_search(ctx, file, search_bound); }; });

  auto* polytope = app.add_subcommand("polytope", "Polytope computations");
  polytope->require_subcommand(1);
  auto* mv = polytope->add_subcommand("mv", "Mixed volume of d polytopes in dimension d");
  mv->add_option("file", file, "Polytope list JSON file")->required();
  mv->callback([&] { action = [&] { polytope_mv(ctx, file); }; });

  auto* series = app.add_subcommand("series", "Valued power series");
  series->require_subcommand(1);
  std::string m_text;
  auto* newton = series->add_subcommand("newton", "Newton polygon New_m");
  newton->add_option("file", file, "Series JSON file")->required();
  newton->add_option("--m", m_text, "Radius m, a positive rational")->required();
  newton->callback([&] { action = [&] { series_newton(ctx, file, m_text); }; });

  auto* bound_cmd = app.add_subcommand("bound", "Conditional bounds on degree-d points");
  bound_cmd->require_subcommand(1);
  std::string assume;
  int degree = 2;
  std::optional<std::uint64_t> prime;
  std::optional<int> budget;
  bool refined = false;
  for (const std::string kind : {"quadratic", "cubic", "generic"}) {
    auto* sub = bound_cmd->add_subcommand(kind, "Bound for " + kind + (kind == "generic" ? " degree d" : " points"));
    sub->add_option("file", file, "Curve JSON file")->required();
    sub->add_option("--assume", assume, "Declared hypotheses: rank1,simple,dagger");
    sub->add_option("--budget", budget, "Override the vanishing-order budget 2r");
    if (kind == "generic") {
      sub->add_option("--d", degree, "Degree d >= 2")->required();
      sub->add_option("--p", prime, "Prime to use instead of the smallest prime above d^2 + 3");
      sub->add_flag("--refined", refined, "Use point counts over F_{p^k}, k <= d");
    }
    sub->callback([&, kind] { action = [&, kind] { bound(ctx, kind, file, assume, degree, prime, budget, refined); }; });
  }

  auto* family = app.add_subcommand("family", "Congruence families mod 3");
  family->require_subcommand(1);
  int g_min = 3, g_max = 3;
  auto* verify = family->add_subcommand("verify", "Build and verify the family member for each genus");
  verify->add_option("--g-min", g_min, "Smallest genus")->capture_default_str();
  verify->add_option("--g-max", g_max, "Largest genus")->capture_default_str();
  verify->callback([&] { action = [&] { family_verify(ctx, g_min, g_max); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kMalformed;
  }

  try {
    action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

}  // namespace hyperbound::cli
