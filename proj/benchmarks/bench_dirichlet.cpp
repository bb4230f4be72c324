#include <benchmark/benchmark.h>

#include "addtrans/dirichlet.hpp"

using namespace addtrans;

static void BM_ConvolveTable(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const ArithFn& mu = *find_in_catalog("mu");
  const ArithFn& id = *find_in_catalog("id");
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_table(mu, id, bound));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_ConvolveTable)->Arg(1000)->Arg(10'000)->Arg(100'000);

static void BM_MobiusInvert(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const ValueTable table = value_table(*find_in_catalog("sigma_1"), bound);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius_invert(table));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_MobiusInvert)->Arg(1000)->Arg(10'000)->Arg(100'000);

static void BM_ConvolveAt(benchmark::State& state) {
  const ArithFn& mu = *find_in_catalog("mu");
  const ArithFn& sigma = *find_in_catalog("sigma_1");
  const auto f = factorize(Integer(720'720));
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_at(mu, sigma, f));
  }
}
BENCHMARK(BM_ConvolveAt);

BENCHMARK_MAIN();
