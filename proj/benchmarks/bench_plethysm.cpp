#include <benchmark/benchmark.h>

#include "monrep/chow.hpp"
#include "monrep/partition.hpp"
#include "monrep/power_sum.hpp"

using namespace monrep;

namespace {

// Rebuilding the expansion each round; the production cache is bypassed by
// calling the internal pipeline through schur_expansion on a fresh degree.
void BM_PlethysmExpansion(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PowerSumVector& f = h_plethysm_h(d, 3);
    SchurExpansion expansion = schur_expansion(f, 3);
    benchmark::DoNotOptimize(expansion.mults.size());
  }
}
BENCHMARK(BM_PlethysmExpansion)->Arg(4)->Arg(6)->Arg(8);

void BM_HoleScan(benchmark::State& state) {
  const int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto holes = chow3_hole_scan(dmax);
    benchmark::DoNotOptimize(holes.size());
  }
}
BENCHMARK(BM_HoleScan)->Arg(5)->Arg(7);

void BM_BruteForceOracle(benchmark::State& state) {
  const Partition la({7, 3, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_mult(la, 4, 3));
  }
}
BENCHMARK(BM_BruteForceOracle);

}  // namespace

BENCHMARK_MAIN();
