#include "hyperbound/bound_engine.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "hyperbound/error.hpp"
#include "hyperbound/finite_field.hpp"
#include "hyperbound/numtheory.hpp"
#include "hyperbound/point_count.hpp"
#include "hyperbound/polytope.hpp"
#include "hyperbound/valued_series.hpp"

namespace hyperbound {

namespace {

constexpr int kUnitBound = 3;  // vanishing orders are at most 2
constexpr int kCrossCheckMaxDim = 4;
const char* const kTieBreak = "lexicographically smallest list of active group indices";

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

std::vector<std::string> hypothesis_statements(const Hypotheses& h) {
  std::vector<std::string> out;
  if (h.rank_le_1) out.emplace_back("rank_le_1: the Jacobian has Mordell-Weil rank at most 1");
  if (h.geometrically_simple) out.emplace_back("geometrically_simple: the Jacobian is geometrically simple");
  if (h.condition_dagger) {
    out.emplace_back("condition_dagger: isolated points of the tropicalized intersection stay isolated");
  }
  return out;
}

void require_hypotheses(const Hypotheses& h) {
  std::string missing;
  auto note = [&](bool ok, const char* name) {
    if (ok) return;
    if (!missing.empty()) missing += ", ";
    missing += name;
  };
  note(h.rank_le_1, "rank1 (Jacobian rank at most 1)");
  note(h.geometrically_simple, "simple (geometrically simple Jacobian)");
  note(h.condition_dagger, "dagger (tropical isolation condition)");
  if (!missing.empty()) throw PreconditionError("conditional bound needs declared hypotheses; missing: " + missing);
}

std::uint64_t bertrand_prime(int d) {
  if (d < 2) throw InputError("degree d must be at least 2");
  return next_prime_after(static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d) + 3);
}

CrudeBound crude_bound(int d, std::uint64_t p) {
  if (d < 2) throw InputError("degree d must be at least 2");
  if (!is_prime(p)) throw InputError("p must be prime");
  const std::uint64_t floor_p = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d) + 3;
  if (p <= floor_p) {
    throw PreconditionError("p = " + std::to_string(p) + " must exceed d^2 + 3 = " + std::to_string(floor_p));
  }
  const auto ud = static_cast<unsigned long>(d);
  auto formula = [&](const Integer& q) { return ipow(3 * Integer(ud) * (2 * ipow(q, ud) + 1), ud); };
  return {formula(Integer(static_cast<unsigned long>(p))),
          formula(Integer(static_cast<unsigned long>(2 * floor_p - 3)))};
}

namespace {

// Worst-case integrated series on one axis: a_i non-units below the
// vanishing order, units from there on.
ValuedSeries worst_case_axis(int order, const Rational& m, std::uint64_t p) {
  IntegratedSeriesSpec spec{p, {}};
  const int last = last_exceptional_exponent(p, m, kUnitBound, 0);
  for (int i = 0; i < last; ++i) spec.coeff_valuations.emplace_back(Rational(i < order ? 1 : 0));
  return integrate_certified(spec, m, kUnitBound);
}

}  // namespace

DiskBound per_disk_bound(int d, const std::vector<int>& orders, const std::vector<Rational>& radii, std::uint64_t p,
                         bool center_counts) {
  if (d < 1 || d > 6) throw InputError("degree d must be between 1 and 6");
  if (orders.size() != static_cast<std::size_t>(d) || radii.size() != static_cast<std::size_t>(d)) {
    throw InputError("one vanishing order and one radius per coordinate are required");
  }
  for (int o : orders) {
    if (o < 0 || o > 2) throw InputError("vanishing order must be 0, 1 or 2");
  }
  for (const auto& m : radii) {
    if (m <= 0) throw InputError("radius must be positive");
  }
  if (!is_prime(p)) throw InputError("p must be prime");

  DiskBound out;
  for (int i = 0; i < d; ++i) {
    const int base = orders[i] + 1;
    out.extents.push_back(last_exceptional_exponent(p, radii[i], base, padic_valuation(std::uint64_t(base), p)));
  }
  for (int i = 0; i < d && !out.empty_axis; ++i) {
    if (radii[i] != 1 || orders[i] != 0) continue;
    out.empty_axis = newton_exponents(worst_case_axis(0, 1, p), Rational(1)).empty();
  }

  if (out.empty_axis) {
    out.non_center = 0;
  } else {
    std::vector<Vector> pts;
    for (int i = 0; i < d; ++i) {
      Vector lo(static_cast<std::size_t>(d), Rational(0)), hi = lo;
      lo[i] = 1;
      hi[i] = out.extents[i];
      pts.push_back(std::move(lo));
      pts.push_back(std::move(hi));
    }
    const Polytope envelope = convex_hull(pts);
    const Rational mv = mixed_volume(std::vector<Polytope>(static_cast<std::size_t>(d), envelope));
    if (mv.get_den() != 1) throw std::logic_error("mixed volume of a lattice polytope is not an integer");
    out.non_center = mv.get_num();

    if (d <= kCrossCheckMaxDim) {
      std::vector<ValuedSeries> axes;
      for (int i = 0; i < d; ++i) axes.push_back(worst_case_axis(orders[i], radii[i], p));
      const ValuedSeries f = sum_in_distinct_vars(axes, std::nullopt);
      for (const auto& u : newton_exponents(f, radii)) {
        Vector x(u.begin(), u.end());
        if (!envelope.contains(x)) throw std::logic_error("worst-case Newton polygon leaves the envelope");
      }
    }
  }
  out.ordered_count = out.non_center + (center_counts ? 1 : 0);
  return out;
}

DiskBound per_disk_bound(int d, int vanishing_order, const Rational& m, std::uint64_t p) {
  return per_disk_bound(d, std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), vanishing_order),
                        std::vector<Rational>(static_cast<std::size_t>(std::max(d, 0)), m), p, true);
}

Allocation allocate_vanishing(const std::vector<VanishingGroup>& groups, int budget) {
  if (budget < 0) throw InputError("vanishing budget must be nonnegative");
  if (groups.size() > 20) throw InputError("too many vanishing groups for exhaustive allocation");
  for (const auto& g : groups) {
    if (g.cost < 0) throw InputError("group cost must be nonnegative");
  }
  std::optional<Allocation> best;
  const std::size_t n = groups.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int cost = 0;
    Allocation a;
    a.total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        cost += groups[i].cost;
        a.active.push_back(i);
        a.total += groups[i].gain_active;
      } else {
        a.total += groups[i].gain_inactive;
      }
    }
    if (cost > budget) continue;
    if (!best || a.total > best->total || (a.total == best->total && a.active < best->active)) best = std::move(a);
  }
  return *best;
}

namespace {

nlohmann::ordered_json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["curve"] = report.curve;
  j["d"] = report.d;
  j["p"] = report.p;
  j["hypotheses"] = report.hypotheses;
  j["configurations"] = nlohmann::ordered_json::array();
  for (const auto& c : report.configurations) {
    nlohmann::ordered_json r;
    r["class"] = c.label;
    r["radius"] = nlohmann::ordered_json::array();
    for (const auto& m : c.radius) r["radius"].push_back(to_string(m));
    r["vanishing_order"] = c.vanishing_order;
    r["ordered_count"] = json_integer(c.ordered_count);
    r["stabilizer"] = c.stabilizer;
    r["unordered_count"] = json_integer(c.unordered_count);
    if (!c.note.empty()) r["note"] = c.note;
    j["configurations"].push_back(std::move(r));
  }
  j["allocation"] = {{"budget", report.budget}, {"active_groups", report.active_groups}, {"tie_break", kTieBreak}};
  j["method"] = report.method;
  j["tuple_bound"] = json_integer(report.tuple_bound);
  j["point_bound"] = json_integer(report.point_bound);
  return j;
}

namespace {

struct ResidueData {
  FpPolynomial fbar;
  std::vector<std::string> pair_labels;  // one per Frobenius orbit of size 2 over F_9
};

void check_declared_prime(const Hypotheses& h, std::uint64_t p) {
  if (h.good_reduction_at && *h.good_reduction_at != p) {
    throw PreconditionError("declared good-reduction prime " + std::to_string(*h.good_reduction_at) +
                            " differs from the prime " + std::to_string(p) + " used by this bound");
  }
}

// |C(F_3)| = 1 and C(F_9) = {inf, (i, +-alpha)} with i in F_3, alpha not in F_3.
ResidueData residue_data_at_3(const CurveModel& curve) {
  if (!good_reduction(curve, 3)) throw PreconditionError("bad reduction at 3");
  ResidueData out{reduce_mod(curve, 3), {}};
  const FFContext f3(3, 1), f9(3, 2);
  const auto n3 = count_affine_points(out.fbar, f3) + 1;
  if (n3 != 1) throw PreconditionError("|C(F_3)| = " + std::to_string(n3) + ", expected 1");
  const auto pts = affine_points(out.fbar, f9);
  if (pts.size() + 1 != 7) throw PreconditionError("|C(F_9)| = " + std::to_string(pts.size() + 1) + ", expected 7");
  for (const auto& pt : pts) {
    if (!f9.in_prime_field(pt.x) || f9.in_prime_field(pt.y)) {
      throw PreconditionError("C(F_9) is not of the form {inf, (i, +-alpha)} with i in F_3, alpha outside F_3");
    }
  }
  for (const auto& orbit : frobenius_orbits(pts, f9)) {
    if (orbit[0].at_infinity) continue;
    if (orbit.size() != 2) throw PreconditionError("unexpected Frobenius orbit size over F_9");
    out.pair_labels.push_back("F9 pair x=" + f9.format(orbit[0].x));
  }
  return out;
}

std::string curve_label(const CurveModel& curve) { return "y^2 = " + curve.to_string(); }

// Worst case over vanishing orders 0..2 of the same order on every coordinate.
std::pair<Integer, int> worst_over_orders(int d, const Rational& m, std::uint64_t p) {
  Integer best = -1;
  int arg = 0;
  for (int o = 0; o <= 2; ++o) {
    const auto b = per_disk_bound(d, std::vector<int>(std::size_t(d), o), std::vector<Rational>(std::size_t(d), m), p,
                                  false);
    if (b.non_center >= best) {
      best = b.non_center;
      arg = o;
    }
  }
  return {best, arg};
}

void add_groups(BoundReport& report, const std::vector<std::string>& labels, const std::vector<Rational>& radius,
                const std::vector<int>& active_orders, int budget) {
  const std::vector<int> idle(active_orders.size(), 0);
  const auto on = per_disk_bound(report.d, active_orders, radius, report.p, false);
  const auto off = per_disk_bound(report.d, idle, radius, report.p, false);
  int cost = 0;
  for (int o : active_orders) cost += o;
  std::vector<VanishingGroup> groups(labels.size(), VanishingGroup{cost, on.non_center, off.non_center});
  const Allocation alloc = allocate_vanishing(groups, budget);
  report.budget = budget;
  report.active_groups = alloc.active;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool active = std::binary_search(alloc.active.begin(), alloc.active.end(), i);
    const auto& b = active ? on : off;
    ConfigurationRecord r{labels[i], radius, active ? active_orders : idle, b.non_center, 1, b.non_center, {}};
    if (b.empty_axis) {
      r.note = "New_1 is empty on an unramified coordinate of order 0";
    } else if (std::adjacent_find(radius.begin(), radius.end(), std::not_equal_to<>()) != radius.end()) {
      r.note = "mixed radii; bounded by the mixed volume of the worst-case polygons at these radii";
    }
    report.configurations.push_back(std::move(r));
  }
}

void finish(BoundReport& report) {
  report.tuple_bound = 0;
  for (const auto& c : report.configurations) report.tuple_bound += c.unordered_count;
  report.point_bound = report.tuple_bound * report.d;
}

}  // namespace

BoundReport quadratic_pipeline(const CurveModel& curve, const Hypotheses& hypotheses, const PipelineOptions& options) {
  require_hypotheses(hypotheses);
  check_declared_prime(hypotheses, 3);
  if (curve.genus() < 3) throw PreconditionError("quadratic bound needs genus at least 3");
  const ResidueData data = residue_data_at_3(curve);

  BoundReport report;
  report.curve = curve_label(curve);
  report.d = 2;
  report.p = 3;
  report.hypotheses = hypothesis_statements(hypotheses);
  report.method = "explicit";

  const Rational half(1, 2);
  const auto [inf_count, inf_order] = worst_over_orders(2, half, 3);
  report.configurations.push_back({"(inf, inf)", {half, half}, {inf_order, inf_order}, inf_count, 2, inf_count / 2,
                                   "same count for every vanishing order at infinity"});
  add_groups(report, data.pair_labels, {1, 1}, {1, 1}, options.budget.value_or(2));
  finish(report);
  return report;
}

BoundReport cubic_pipeline(const CurveModel& curve, const Hypotheses& hypotheses, const PipelineOptions& options) {
  require_hypotheses(hypotheses);
  check_declared_prime(hypotheses, 3);
  if (curve.genus() < 4) throw PreconditionError("cubic bound needs genus at least 4");
  const ResidueData data = residue_data_at_3(curve);

  BoundReport report;
  report.curve = curve_label(curve);
  report.d = 3;
  report.p = 3;
  report.hypotheses = hypothesis_statements(hypotheses);
  report.method = "explicit";

  const Rational third(1, 3);
  const auto [inf_count, inf_order] = worst_over_orders(3, third, 3);
  report.configurations.push_back({"(inf, inf, inf)",
                                   {third, third, third},
                                   {inf_order, inf_order, inf_order},
                                   inf_count,
                                   6,
                                   inf_count / 6,
                                   "same count for every vanishing order at infinity"});

  const FFContext f27(3, 3);
  std::size_t cubic_orbits = 0;
  for (const auto& orbit : frobenius_orbits(affine_points(data.fbar, f27), f27)) {
    if (orbit.size() == 3) ++cubic_orbits;
  }
  const Integer cap = closed_points_P1(3, 3);
  report.configurations.push_back({"F27 cubic orbits",
                                   {1, 1, 1},
                                   {0, 0, 0},
                                   cap,
                                   1,
                                   cap,
                                   "centers only, one per degree-3 closed point of P^1; C has " +
                                       std::to_string(cubic_orbits) + " Frobenius orbits of size 3 over F_27"});

  std::vector<std::string> labels;
  for (const auto& l : data.pair_labels) labels.push_back(l + " with inf");
  add_groups(report, labels, {1, 1, third}, {1, 1, 0}, options.budget.value_or(2));
  finish(report);
  return report;
}

namespace {

// Ordered residue d-tuples of conjugate points: d! [x^d] prod_f
// (sum_c x^{cf} / (c!)^f)^{N_f}, N_f closed points of degree f.
Integer refined_residue_tuples(int d, const std::vector<Integer>& closed) {
  std::vector<Rational> poly(std::size_t(d) + 1, Rational(0));
  poly[0] = 1;
  for (int f = 1; f <= d; ++f) {
    std::vector<Rational> factor(std::size_t(d) + 1, Rational(0));
    for (int c = 0; c * f <= d; ++c) factor[std::size_t(c * f)] = Rational(1) / Rational(ipow(factorial(c), std::size_t(f)));
    for (Integer k = 0; k < closed[std::size_t(f - 1)]; ++k) {
      std::vector<Rational> next(std::size_t(d) + 1, Rational(0));
      for (int i = 0; i <= d; ++i) {
        if (poly[std::size_t(i)] == 0) continue;
        for (int j = 0; i + j <= d; ++j) next[std::size_t(i + j)] += poly[std::size_t(i)] * factor[std::size_t(j)];
      }
      poly = std::move(next);
    }
  }
  const Rational out = poly[std::size_t(d)] * Rational(factorial(d));
  if (out.get_den() != 1) throw std::logic_error("non-integral residue tuple count");
  return out.get_num();
}

}  // namespace

BoundReport generic_pipeline(int d, const CurveModel& curve, const Hypotheses& hypotheses,
                             const PipelineOptions& options) {
  if (d < 2) throw InputError("degree d must be at least 2");
  if (d > 6) throw InputError("degree d must be at most 6");
  require_hypotheses(hypotheses);
  const std::uint64_t p = options.prime.value_or(bertrand_prime(d));
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p == 3 && d == 2) return quadratic_pipeline(curve, hypotheses, options);
  if (p == 3 && d == 3) return cubic_pipeline(curve, hypotheses, options);
  check_declared_prime(hypotheses, p);
  if (curve.genus() <= d) throw PreconditionError("bound for degree d needs genus greater than d");
  const std::uint64_t floor_p = std::uint64_t(d) * std::uint64_t(d) + 3;
  if (p <= floor_p) {
    throw PreconditionError("p = " + std::to_string(p) + " must exceed d^2 + 3 = " + std::to_string(floor_p));
  }
  if (!good_reduction(curve, p)) throw PreconditionError("bad reduction at " + std::to_string(p));

  BoundReport report;
  report.curve = curve_label(curve);
  report.d = d;
  report.p = p;
  report.hypotheses = hypothesis_statements(hypotheses);
  report.budget = options.budget.value_or(2);

  const Rational m(1, d * d);
  const auto per = per_disk_bound(d, 2, m, p);
  Integer residues;
  if (options.refined) {
    Integer size = 1;
    for (int k = 0; k < d; ++k) size *= static_cast<unsigned long>(p);
    if (size > FFContext::kMaxOrder) {
      throw PreconditionError("refined count needs p^d <= " + std::to_string(FFContext::kMaxOrder));
    }
    const FpPolynomial fbar = reduce_mod(curve, p);
    std::vector<Integer> counts;
    for (int k = 1; k <= d; ++k) {
      const FFContext ctx(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
      counts.emplace_back(static_cast<unsigned long>(count_affine_points(fbar, ctx) + 1));
    }
    std::vector<Integer> closed;
    for (int f = 1; f <= d; ++f) closed.push_back(closed_points_from_counts(counts, static_cast<unsigned>(f)));
    residues = refined_residue_tuples(d, closed);
    report.method = "refined";
  } else {
    residues = ipow(Integer(d) * (2 * ipow(Integer(static_cast<unsigned long>(p)), std::size_t(d)) + 1), std::size_t(d));
    report.method = "crude";
  }
  const Integer ordered = residues * per.ordered_count;
  std::vector<Rational> radius(std::size_t(d), m);
  report.configurations.push_back({"all residue tuples",
                                   radius,
                                   std::vector<int>(std::size_t(d), 2),
                                   ordered,
                                   d,
                                   ordered / d,
                                   to_string(residues) + " residue tuples, " + to_string(per.ordered_count) +
                                       " ordered tuples each"});
  finish(report);
  return report;
}

}  // namespace hyperbound
