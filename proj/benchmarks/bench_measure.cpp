#include <benchmark/benchmark.h>

#include "nikodym/construction.hpp"
#include "nikodym/measure.hpp"
#include "nikodym/stochastic.hpp"

using namespace nikodym;

static void BM_IntersectCrossingPair(benchmark::State& state) {
  const Family f = build_family(static_cast<int>(state.range(0)));
  const ConvexPolygon& q = f.q_polygons()[0];
  const ConvexPolygon& r = f.r_polygons()[0];
  for (auto _ : state) benchmark::DoNotOptimize(intersect_convex(q, r));
}
BENCHMARK(BM_IntersectCrossingPair)->Arg(3)->Arg(31);

static void BM_BuildFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_family(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildFamily)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

// Disjointness check plus clipping of every box-overlapping Q x R pair.
static void BM_FamilyMeasure(benchmark::State& state) {
  const Family f = build_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const FamilyMeasure m(f);
    benchmark::DoNotOptimize(m.crossings().size());
  }
}
BENCHMARK(BM_FamilyMeasure)->Arg(11)->Arg(21)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_DeviationsByClipping(benchmark::State& state) {
  const FamilyMeasure m(build_family(static_cast<int>(state.range(0))));
  const StripQuery q{Axis::horizontal, Rational(3, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(m.deviations(q));
}
BENCHMARK(BM_DeviationsByClipping)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_SupDeviations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const FamilyMeasure m(build_family(n));
    benchmark::DoNotOptimize(sup_deviations(m));
  }
}
BENCHMARK(BM_SupDeviations)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  const Family f = build_family(15);
  const StripQuery full{Axis::vertical, Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(mc_union_area(f, full, static_cast<std::uint64_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
