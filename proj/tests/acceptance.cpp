// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hyperbound/bound_engine.hpp"
#include "hyperbound/curve.hpp"
#include "hyperbound/family.hpp"
#include "hyperbound/point_count.hpp"
#include "hyperbound/polytope.hpp"
#include "hyperbound/valued_series.hpp"
#include "oracles.hpp"

using namespace hyperbound;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

CurveModel curve_of(std::initializer_list<long> desc) {
  return CurveModel::from_descending(std::vector<Integer>(desc.begin(), desc.end()));
}

Outcome mixed_volume_examples() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    for (long a = 1; a <= 5; ++a) {
      std::vector<Vector> pts;
      for (int i = 0; i < d; ++i) {
        Vector e(d, Rational(0));
        e[i] = 1;
        pts.push_back(e);
        e[i] = a;
        pts.push_back(e);
      }
      const Polytope z = convex_hull(pts);
      const Rational mv = mixed_volume(std::vector<Polytope>(d, z));
      if (mv != Rational(ipow(Integer(a), d) - 1))
        o.fail("d=" + std::to_string(d) + " a=" + std::to_string(a) + " gave " + mv.get_str());
    }
  }
  return o;
}

Outcome quadratic_bound() {
  Outcome o;
  const BoundReport r = quadratic_pipeline(curve_of({1, 0, -1, 0, 0, 0, 0, -1}), Hypotheses::all_asserted());
  if (r.tuple_bound != 12) o.fail("pairs " + r.tuple_bound.get_str());
  if (r.point_bound != 24) o.fail("points " + r.point_bound.get_str());
  return o;
}

Outcome cubic_bound() {
  Outcome o;
  const BoundReport r = cubic_pipeline(curve_of({1, 0, 0, 0, 0, 0, 1, 0, 1, -1}), Hypotheses::all_asserted());
  if (r.tuple_bound != 38) o.fail("triples " + r.tuple_bound.get_str());
  if (r.point_bound != 114) o.fail("points " + r.point_bound.get_str());
  return o;
}

Outcome family_sweep() {
  Outcome o;
  for (int g = 3; g <= 200; ++g) {
    const FamilyVerification v = verify_family_member(build_family_member(g));
    if (!v.passed) {
      std::string which;
      for (const auto& c : v.checks)
        if (!c.passed) which += " " + c.name;
      o.fail("g=" + std::to_string(g) + " failed:" + which);
    }
  }
  return o;
}

IntegratedSeriesSpec random_spec(std::mt19937& rng, std::uint64_t p, int len) {
  std::uniform_int_distribution<int> v(-1, 4);
  IntegratedSeriesSpec s;
  s.p = p;
  for (int i = 0; i < len; ++i) {
    const int x = v(rng);
    s.coeff_valuations.push_back(x < 0 ? ExtendedRational{} : ExtendedRational{Rational(x)});
  }
  return s;
}

bool inside_1_3(const std::vector<Exponent>& us) {
  for (const auto& u : us)
    if (u[0] < 1 || u[0] > 3) return false;
  return true;
}

Outcome newton_containment() {
  Outcome o;
  std::mt19937 rng(2024);
  const std::vector<std::uint64_t> primes{3, 7, 11, 13, 17};
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    IntegratedSeriesSpec s = random_spec(rng, primes[t % primes.size()], 40);
    s.coeff_valuations[0] = Rational(0);
    if (!newton_polygon(integrate_certified(s, Rational(1), 3), Rational(1)).empty()) ++bad;
    if (!inside_1_3(newton_exponents(integrate_certified(s, Rational(1, 2), 3), Rational(1, 2)))) ++bad;
  }
  for (int t = 0; t < 500; ++t) {
    IntegratedSeriesSpec s = random_spec(rng, primes[t % primes.size()], 40);
    s.coeff_valuations[1 + t % 2] = Rational(0);
    if (!inside_1_3(newton_exponents(integrate_certified(s, Rational(1), 3), Rational(1)))) ++bad;
    if (!inside_1_3(newton_exponents(integrate_certified(s, Rational(1, 2), 3), Rational(1, 2)))) ++bad;
  }
  for (int t = 0; t < 500; ++t) {
    IntegratedSeriesSpec s = random_spec(rng, 3, 40);
    s.coeff_valuations[t % 3] = Rational(0);
    if (!inside_1_3(newton_exponents(integrate_certified(s, Rational(1, 3), 3), Rational(1, 3)))) ++bad;
  }
  if (bad) o.fail(std::to_string(bad) + " counterexamples");
  return o;
}

Outcome closed_points() {
  Outcome o;
  if (closed_points_P1(3, 3) != 8) o.fail("closed_points_P1(3,3) = " + closed_points_P1(3, 3).get_str());
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned d = 1; d <= 6; ++d) {
      Integer sum = 0;
      for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0) sum += Integer(e) * closed_points_P1(p, e);
      if (sum != ipow(Integer(static_cast<unsigned long>(p)), d) + 1)
        o.fail("identity fails at p=" + std::to_string(p) + " d=" + std::to_string(d));
    }
  }
  return o;
}

Outcome crude_formula() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    const std::uint64_t p = bertrand_prime(d);
    // Independent evaluation by repeated multiplication.
    Integer pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
    const Integer base = Integer(3 * d) * (2 * pd + 1);
    Integer expected = 1;
    for (int i = 0; i < d; ++i) expected *= base;
    if (crude_bound(d, p).value != expected) o.fail("d=" + std::to_string(d));
  }
  return o;
}

bool has_point(const std::vector<QuadraticPoint>& pts, long D, const Rational& xu, const Rational& xv,
               const Rational& yu, const Rational& yv) {
  for (const auto& q : pts)
    if (q.disc == D && q.x.u() == xu && q.x.v() == xv && q.y.u() == yu && q.y.v() == yv) return true;
  return false;
}

Outcome example_points() {
  Outcome o;
  const auto a = search_quadratic_points(curve_of({1, 0, 0, 0, 0, 0, 1, 0, 0, -1}), 5);
  for (int s : {1, -1}) {
    if (!has_point(a, -1, 0, 1, 0, s)) o.fail("missing (i, " + std::to_string(s) + "i)");
    if (!has_point(a, -3, Rational(-1, 2), Rational(1, 2), s, 0)) o.fail("missing (zeta_3, " + std::to_string(s) + ")");
  }
  const auto b = search_quadratic_points(curve_of({1, 8, 39, 360, -184, 688, -516, 0}), 3);
  if (!has_point(b, -2, 0, 1, 0, 0)) o.fail("missing (sqrt(-2), 0)");
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  int mismatches = 0;
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n; ++k)
      for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
          std::vector<Integer> f(n + 1, Integer(0));
          f[0] = 1;
          f[n - k] += a;
          f[n] += b;
          if (swan_discriminant_trinomial(n, k, Integer(a), Integer(b)) != oracle::sylvester_discriminant(f)) ++mismatches;
        }

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 3), e1(0, 8), v(-6, 6), size(2, 6), pick(0, 3);
  const Rational radii_choices[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
  for (std::size_t d = 1; d <= 2; ++d) {
    for (int t = 0; t < 300; ++t) {
      ValuedSeries f(d);
      const int count = size(rng);
      while (static_cast<int>(f.size()) < count) {
        Exponent u(d);
        for (auto& x : u) x = d == 1 ? e1(rng) : e(rng);
        f.set(u, Rational(v(rng)) / 2);
      }
      std::vector<Rational> radii;
      for (std::size_t i = 0; i < d; ++i) radii.push_back(radii_choices[pick(rng)]);
      const auto lp = newton_exponents(f, radii);
      if (lp != oracle::newton_by_vertices(f, radii)) ++mismatches;
      if (d == 1 && lp != newton_exponents_by_ties(f, radii[0])) ++mismatches;
    }
  }

  std::uniform_int_distribution<int> cost(0, 3), gain(0, 40), groups_n(0, 8), budget(0, 4);
  for (int t = 0; t < 500; ++t) {
    std::vector<VanishingGroup> groups(groups_n(rng));
    for (auto& g : groups) g = {cost(rng), gain(rng), gain(rng)};
    const int b = budget(rng);
    if (allocate_vanishing(groups, b).total != oracle::best_allocation(groups, b)) ++mismatches;
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mixed volume a^d - 1", 10, mixed_volume_examples},
      {2, "quadratic bound 12 pairs, 24 points", 5, quadratic_bound},
      {3, "cubic bound 38 triples, 114 points", 5, cubic_bound},
      {4, "family verification g in [3, 200]", 60, family_sweep},
      {5, "Newton polygon containment, 500 prefixes per case", 60, newton_containment},
      {6, "closed points on P^1 and Moebius identity", 0, closed_points},
      {7, "crude formula for d <= 5", 0, crude_formula},
      {8, "rediscovery of the example quadratic points", 120, example_points},
      {9, "oracle equivalences", 0, oracle_equivalences},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream why;
      why << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.fail(why.str());
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << timing;
    if (c.limit_seconds > 0) std::cout << " / " << c.limit_seconds << " s";
    std::cout << ")";
    if (!o.ok) std::cout << "  " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
