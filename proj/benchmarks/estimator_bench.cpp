#include <benchmark/benchmark.h>

#include "hdlab/estimator/chain.hpp"

using namespace hdlab::estimator;

static void BM_ChainBuild(benchmark::State& state) {
  const auto depth = static_cast<std::uint64_t>(state.range(0));
  const auto tower = CoordinateTower::unit(2, depth);
  const Rational eta(BigInt(1), BigInt(3));
  for (auto _ : state) benchmark::DoNotOptimize(chain_build(tower, eta, depth).state.j);
}
BENCHMARK(BM_ChainBuild)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
