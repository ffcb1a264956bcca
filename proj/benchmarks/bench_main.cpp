#include <benchmark/benchmark.h>

#include "hyperbound/bound_engine.hpp"
#include "hyperbound/family.hpp"
#include "hyperbound/point_count.hpp"
#include "hyperbound/polytope.hpp"
#include "hyperbound/valued_series.hpp"

using namespace hyperbound;

namespace {

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

CurveModel curve_of(std::initializer_list<long> desc) {
  return CurveModel::from_descending(std::vector<Integer>(desc.begin(), desc.end()));
}

}  // namespace

static void BM_MixedVolumeEnvelope(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Polytope z = envelope(d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(std::vector<Polytope>(d, z)));
}
BENCHMARK(BM_MixedVolumeEnvelope)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_PointCount(benchmark::State& state) {
  const FpPolynomial f = FpPolynomial::from_descending(3, {1, 0, 0, 0, 0, 0, 1, 0, 1, 2});
  const FFContext k(3, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_affine_points(f, k));
}
BENCHMARK(BM_PointCount)->DenseRange(2, 8, 2);

static void BM_NewtonIntegrated(benchmark::State& state) {
  IntegratedSeriesSpec s;
  s.p = 3;
  for (int i = 0; i < 30; ++i) s.coeff_valuations.emplace_back(Rational(i % 3 == 0 ? 0 : 1));
  const ValuedSeries f = integrate_certified(s, Rational(1, 3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(newton_exponents(f, Rational(1, 3)));
}
BENCHMARK(BM_NewtonIntegrated);

static void BM_QuadraticPipeline(benchmark::State& state) {
  const CurveModel c = curve_of({1, 0, -1, 0, 0, 0, 0, -1});
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_pipeline(c, Hypotheses::all_asserted()));
}
BENCHMARK(BM_QuadraticPipeline)->Unit(benchmark::kMillisecond);

static void BM_CubicPipeline(benchmark::State& state) {
  const CurveModel c = curve_of({1, 0, 0, 0, 0, 0, 1, 0, 1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(cubic_pipeline(c, Hypotheses::all_asserted()));
}
BENCHMARK(BM_CubicPipeline)->Unit(benchmark::kMillisecond);

static void BM_FamilyVerify(benchmark::State& state) {
  const FamilyMember m = build_family_member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family_member(m));
}
BENCHMARK(BM_FamilyVerify)->Arg(3)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
