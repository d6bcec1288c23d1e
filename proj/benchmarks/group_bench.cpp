#include <benchmark/benchmark.h>

#include "hdlab/estimator/density.hpp"
#include "hdlab/group/families.hpp"
#include "hdlab/group/series.hpp"

using namespace hdlab::group;

static void BM_ClosureCongruence(benchmark::State& state) {
  const CongruenceGroup g(FinLocalRing::integers_mod(2, static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(whole_group(g).log_order());
}
BENCHMARK(BM_ClosureCongruence)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PPowerSeriesHeisenberg(benchmark::State& state) {
  const UnitriangularGroup g(3, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_terms({SeriesKind::kPPower, 4}, g).size());
}
BENCHMARK(BM_PPowerSeriesHeisenberg)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CyclicCongruenceFastPath(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const CongruenceGroup g(FinLocalRing::integers_mod(2, k));
  const auto x = g.multiply(g.generators()[0], g.generators()[1]);
  for (auto _ : state) benchmark::DoNotOptimize(hdlab::estimator::cyclic_congruence_density(x, g, 1, k).size());
}
BENCHMARK(BM_CyclicCongruenceFastPath)->Arg(12)->Arg(24);
