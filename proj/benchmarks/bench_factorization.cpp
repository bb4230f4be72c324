#include <benchmark/benchmark.h>

#include "addtrans/factorization.hpp"

using namespace addtrans;

static void BM_BuildSpf(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    SpfTable table(bound);
    benchmark::DoNotOptimize(table.spf(bound));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_BuildSpf)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

static void BM_FactorizeBatch(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const SpfTable table(bound);
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      benchmark::DoNotOptimize(table.factorize(n));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_FactorizeBatch)->Arg(10'000)->Arg(100'000);

static void BM_FactorizeSingle(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = bound - 1000; n <= bound; ++n) {
      benchmark::DoNotOptimize(
          factorize(Integer(static_cast<unsigned long>(n))));
    }
  }
  state.SetItemsProcessed(state.iterations() * 1001);
}
BENCHMARK(BM_FactorizeSingle)->Arg(100'000)->Arg(10'000'000);

static void BM_Divisors(benchmark::State& state) {
  const auto f = factorize(Integer(720'720));  // 240 divisors
  for (auto _ : state) {
    benchmark::DoNotOptimize(divisors(f));
  }
}
BENCHMARK(BM_Divisors);

BENCHMARK_MAIN();
