#include <benchmark/benchmark.h>

#include "addtrans/arith_fn.hpp"
#include "addtrans/transform.hpp"

using namespace addtrans;

static void BM_ClosedForm(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const SpfTable spf(bound);
  const ArithFn& f = *find_in_catalog("sigma_1");
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      benchmark::DoNotOptimize(phi_transform(f, spf.factorize(n)));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_ClosedForm)->Arg(10'000)->Arg(100'000);

static void BM_LeibnizRecursion(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const SpfTable spf(bound);
  const ArithFn& f = *find_in_catalog("sigma_1");
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      benchmark::DoNotOptimize(phi_transform_leibniz(f, spf.factorize(n)));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_LeibnizRecursion)->Arg(10'000)->Arg(100'000);

static void BM_Tabulate(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const SpfTable spf(bound);
  const ArithFn phi_f = TransformedFn(*find_in_catalog("big_omega")).as_arith_fn();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tabulate(phi_f, spf, bound));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_Tabulate)->Arg(10'000)->Arg(100'000);

BENCHMARK_MAIN();
