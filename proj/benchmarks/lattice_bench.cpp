#include <benchmark/benchmark.h>

#include <random>

#include "hdlab/lattice/prop34.hpp"
#include "hdlab/lattice/subgroup.hpp"

using namespace hdlab::lattice;
using hdlab::arith::BigInt;
using hdlab::arith::Rational;

static void BM_HermiteIndex(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<IntVector> gens(d + 1, IntVector(d));
  for (auto& g : gens) {
    for (auto& x : g) x = BigInt(static_cast<unsigned long>(rng() % 100000));
  }
  const LatticeSubgroup l(3, d, gens);
  for (auto _ : state) benchmark::DoNotOptimize(l.log_index_at(BigInt(200)));
}
BENCHMARK(BM_HermiteIndex)->Arg(2)->Arg(4)->Arg(8);

static void BM_Prop34Density(benchmark::State& state) {
  const Rational nu(BigInt(2), BigInt(5));
  for (auto _ : state) {
    const auto inst = prop34_build(3, nu, {std::uint64_t{1} << 20, 82});
    benchmark::DoNotOptimize(inst.density().size());
  }
}
BENCHMARK(BM_Prop34Density)->Unit(benchmark::kMillisecond);
