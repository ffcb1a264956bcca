#include <gtest/gtest.h>

#include <random>

#include "hyperbound/bound_engine.hpp"
#include "hyperbound/error.hpp"
#include "hyperbound/polytope.hpp"
#include "oracles.hpp"

using namespace hyperbound;

namespace {

CurveModel curve_of(std::initializer_list<long> desc) {
  std::vector<Integer> c(desc.begin(), desc.end());
  return CurveModel::from_descending(c);
}

const CurveModel& genus3_member() {
  static const CurveModel c = curve_of({1, 0, -1, 0, 0, 0, 0, -1});
  return c;
}

const CurveModel& genus4_member() {
  static const CurveModel c = curve_of({1, 0, 0, 0, 0, 0, 1, 0, 1, -1});
  return c;
}

Polytope envelope(int d, long a) {
  std::vector<Vector> pts;
  for (int i = 0; i < d; ++i) {
    Vector e(d, Rational(0));
    e[i] = 1;
    pts.push_back(e);
    e[i] = a;
    pts.push_back(e);
  }
  return convex_hull(pts);
}

}  // namespace

TEST(Hypotheses, RefusalNamesMissingFlags) {
  Hypotheses h;
  try {
    require_hypotheses(h);
    FAIL() << "expected refusal";
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("rank"), std::string::npos);
    EXPECT_NE(msg.find("simple"), std::string::npos);
    EXPECT_NE(msg.find("dagger"), std::string::npos);
  }
  h = Hypotheses::all_asserted();
  EXPECT_NO_THROW(require_hypotheses(h));
  EXPECT_EQ(hypothesis_statements(h).size(), 3u);
}

TEST(Bertrand, Primes) {
  EXPECT_EQ(bertrand_prime(2), 11u);
  EXPECT_EQ(bertrand_prime(3), 13u);
  EXPECT_EQ(bertrand_prime(4), 23u);
  for (int d = 2; d <= 10; ++d) {
    const std::uint64_t p = bertrand_prime(d);
    EXPECT_GT(p, static_cast<std::uint64_t>(d * d + 3));
    EXPECT_LT(p, static_cast<std::uint64_t>(2 * (d * d + 3)));
  }
}

TEST(CrudeBound, Values) {
  EXPECT_EQ(crude_bound(2, 11).value, 2125764);
  EXPECT_EQ(crude_bound(2, 13).value, 4137156);
  EXPECT_EQ(crude_bound(3, 13).value, ipow(Integer(9 * 4395), 3));
  EXPECT_LE(crude_bound(2, 11).value, crude_bound(2, 11).cap);
  EXPECT_LE(crude_bound(4, bertrand_prime(4)).value, crude_bound(4, bertrand_prime(4)).cap);
  EXPECT_THROW(crude_bound(2, 7), PreconditionError);
  EXPECT_THROW(crude_bound(2, 12), InputError);
}

TEST(PerDisk, Examples) {
  const DiskBound two = per_disk_bound(2, 2, Rational(1, 2), 3);
  EXPECT_EQ(two.non_center, 8);
  EXPECT_EQ(two.ordered_count, 9);

  const DiskBound three = per_disk_bound(3, 2, Rational(1, 3), 3);
  EXPECT_EQ(three.non_center, 26);

  const DiskBound flat = per_disk_bound(3, {0, 0, 0}, {1, 1, 1}, 3, true);
  EXPECT_TRUE(flat.empty_axis);
  EXPECT_EQ(flat.non_center, 0);
  EXPECT_EQ(flat.ordered_count, 1);

  EXPECT_THROW(per_disk_bound(2, 3, Rational(1, 2), 3), InputError);
}

TEST(PerDisk, MatchesEnvelopeMixedVolume) {
  for (int d = 1; d <= 4; ++d) {
    const std::uint64_t p = d == 1 ? 5 : bertrand_prime(d);
    const DiskBound b = per_disk_bound(d, 2, Rational(1, d * d), p);
    const Rational mv = mixed_volume(std::vector<Polytope>(d, envelope(d, 3)));
    EXPECT_EQ(Rational(b.ordered_count - 1), mv);
    EXPECT_EQ(b.ordered_count - 1, ipow(Integer(3), d) - 1);
  }
}

TEST(PerDisk, MixedRadiusCubicClass) {
  const DiskBound b = per_disk_bound(3, {1, 1, 0}, {1, 1, Rational(1, 3)}, 3, false);
  EXPECT_EQ(b.non_center, 26);
  EXPECT_EQ(b.ordered_count, 26);
}

TEST(Allocator, Examples) {
  std::vector<VanishingGroup> quad(3, VanishingGroup{2, 8, 0});
  const Allocation a = allocate_vanishing(quad, 2);
  EXPECT_EQ(a.total, 8);
  EXPECT_EQ(a.active, (std::vector<std::size_t>{0}));
  EXPECT_EQ(allocate_vanishing(quad, 0).total, 0);
  EXPECT_TRUE(allocate_vanishing(quad, 0).active.empty());

  std::vector<VanishingGroup> cubic(3, VanishingGroup{2, 26, 0});
  EXPECT_EQ(4 + 8 + allocate_vanishing(cubic, 2).total, 38);
  EXPECT_THROW(allocate_vanishing(quad, -1), InputError);
}

TEST(Allocator, AgreesWithDepthFirstSearch) {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> cost(0, 3), gain(0, 30), size(0, 8), budget(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<VanishingGroup> groups(size(rng));
    for (auto& g : groups) g = {cost(rng), gain(rng), gain(rng)};
    const int b = budget(rng);
    const Allocation a = allocate_vanishing(groups, b);
    EXPECT_EQ(a.total, oracle::best_allocation(groups, b));
    int spent = 0;
    Integer total = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const bool on = std::find(a.active.begin(), a.active.end(), i) != a.active.end();
      if (on) spent += groups[i].cost;
      total += on ? groups[i].gain_active : groups[i].gain_inactive;
    }
    EXPECT_LE(spent, b);
    EXPECT_EQ(total, a.total);
  }
}

TEST(Pipelines, Quadratic) {
  const BoundReport r = quadratic_pipeline(genus3_member(), Hypotheses::all_asserted());
  EXPECT_EQ(r.d, 2);
  EXPECT_EQ(r.p, 3u);
  EXPECT_EQ(r.tuple_bound, 12);
  EXPECT_EQ(r.point_bound, 24);
  EXPECT_EQ(r.point_bound, r.tuple_bound * r.d);
  Integer sum = 0;
  for (const auto& c : r.configurations) sum += c.unordered_count;
  EXPECT_EQ(sum, r.tuple_bound);

  PipelineOptions zero;
  zero.budget = 0;
  EXPECT_EQ(quadratic_pipeline(genus3_member(), Hypotheses::all_asserted(), zero).tuple_bound, 4);
}

TEST(Pipelines, Cubic) {
  const BoundReport r = cubic_pipeline(genus4_member(), Hypotheses::all_asserted());
  EXPECT_EQ(r.d, 3);
  EXPECT_EQ(r.tuple_bound, 38);
  EXPECT_EQ(r.point_bound, 114);

  PipelineOptions zero;
  zero.budget = 0;
  EXPECT_EQ(cubic_pipeline(genus4_member(), Hypotheses::all_asserted(), zero).tuple_bound, 12);
}

TEST(Pipelines, Refusals) {
  Hypotheses no_rank = Hypotheses::all_asserted();
  no_rank.rank_le_1 = false;
  EXPECT_THROW(quadratic_pipeline(genus3_member(), no_rank), PreconditionError);
  EXPECT_THROW(cubic_pipeline(genus3_member(), Hypotheses::all_asserted()), PreconditionError);
  // x^7 + x + 1 has a rational point over F_3 besides infinity.
  EXPECT_THROW(quadratic_pipeline(curve_of({1, 0, 0, 0, 0, 0, 1, 1}), Hypotheses::all_asserted()), PreconditionError);
  Hypotheses wrong_prime = Hypotheses::all_asserted();
  wrong_prime.good_reduction_at = 5;
  EXPECT_THROW(quadratic_pipeline(genus3_member(), wrong_prime), PreconditionError);
  EXPECT_THROW(generic_pipeline(1, genus4_member(), Hypotheses::all_asserted()), InputError);
  EXPECT_THROW(generic_pipeline(3, genus3_member(), Hypotheses::all_asserted()), PreconditionError);
}

TEST(Pipelines, Deterministic) {
  const auto a = to_json(quadratic_pipeline(genus3_member(), Hypotheses::all_asserted())).dump();
  const auto b = to_json(quadratic_pipeline(genus3_member(), Hypotheses::all_asserted())).dump();
  EXPECT_EQ(a, b);
  const auto c = to_json(cubic_pipeline(genus4_member(), Hypotheses::all_asserted())).dump();
  EXPECT_EQ(c, to_json(cubic_pipeline(genus4_member(), Hypotheses::all_asserted())).dump());
}

TEST(Pipelines, ReportJsonFields) {
  const auto j = to_json(quadratic_pipeline(genus3_member(), Hypotheses::all_asserted()));
  for (const char* key : {"curve", "d", "p", "hypotheses", "configurations", "tuple_bound", "point_bound"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["point_bound"], 24);
  for (const auto& c : j["configurations"]) {
    EXPECT_TRUE(c.contains("class"));
    EXPECT_TRUE(c.contains("unordered_count"));
  }
}

TEST(Pipelines, GenericCrudeAndRefined) {
  const CurveModel& c = genus3_member();
  const BoundReport crude = generic_pipeline(2, c, Hypotheses::all_asserted());
  EXPECT_EQ(crude.p, 11u);
  EXPECT_EQ(crude.point_bound, 2125764);
  EXPECT_EQ(crude.point_bound, crude_bound(2, 11).value);
  EXPECT_EQ(crude.point_bound, crude.tuple_bound * 2);

  PipelineOptions refined;
  refined.refined = true;
  const BoundReport r = generic_pipeline(2, c, Hypotheses::all_asserted(), refined);
  EXPECT_LE(r.point_bound, crude.point_bound);
  EXPECT_EQ(r.point_bound, r.tuple_bound * 2);

  PipelineOptions at3;
  at3.prime = 3;
  EXPECT_EQ(generic_pipeline(2, c, Hypotheses::all_asserted(), at3).point_bound, 24);
  EXPECT_EQ(generic_pipeline(3, genus4_member(), Hypotheses::all_asserted(), at3).point_bound, 114);
}

TEST(Pipelines, RefinedNeverExceedsCrude) {
  const std::vector<CurveModel> curves{genus3_member(), genus4_member(), curve_of({1, 0, 0, 0, 0, 0, 1, 0, 0, -1})};
  for (const auto& c : curves) {
    for (int d = 2; d <= 3; ++d) {
      if (c.genus() <= d) continue;
      for (std::uint64_t p : {bertrand_prime(d), next_prime_after(bertrand_prime(d))}) {
        if (!good_reduction(c, p)) continue;
        PipelineOptions o;
        o.prime = p;
        const Integer crude = generic_pipeline(d, c, Hypotheses::all_asserted(), o).point_bound;
        o.refined = true;
        const BoundReport r = generic_pipeline(d, c, Hypotheses::all_asserted(), o);
        EXPECT_LE(r.point_bound, crude);
        EXPECT_EQ(r.point_bound, r.tuple_bound * d);
      }
    }
  }
}
