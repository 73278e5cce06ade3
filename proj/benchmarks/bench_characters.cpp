#include <benchmark/benchmark.h>

#include "monrep/characters.hpp"
#include "monrep/kronecker.hpp"
#include "monrep/partition.hpp"

using namespace monrep;

namespace {

void BM_CharacterRectangleColumn(benchmark::State& state) {
  const int n = 3;
  const int d = static_cast<int>(state.range(0));
  const Partition mu = rectangle(n, d);
  const auto classes = enumerate_partitions(n * d);
  for (auto _ : state) {
    clear_character_cache();
    BigInt sum = 0;
    for (const auto& rho : classes) sum += mn_character(mu, rho);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(classes.size()));
}
BENCHMARK(BM_CharacterRectangleColumn)->Arg(4)->Arg(5)->Arg(6);

void BM_CharacterCached(benchmark::State& state) {
  const Partition la({9, 6, 3});
  const auto classes = enumerate_partitions(18);
  // warm
  for (const auto& rho : classes) mn_character(la, rho);
  for (auto _ : state) {
    BigInt sum = 0;
    for (const auto& rho : classes) sum += mn_character(la, rho);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(classes.size()));
}
BENCHMARK(BM_CharacterCached);

void BM_SymKronRectangle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition mu = rectangle(3, d);
  const Partition hook({3 * d - 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sym_kron(hook, mu));
  }
}
BENCHMARK(BM_SymKronRectangle)->Arg(3)->Arg(4)->Arg(5);

}  // namespace
