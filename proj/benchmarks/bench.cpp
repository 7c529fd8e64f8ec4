#include <benchmark/benchmark.h>

#include "f1hall/forest.hpp"
#include "f1hall/hall.hpp"

using namespace f1hall;

static void BM_CanonicalKey(benchmark::State& state) {
  auto spec = build_free_monoid(1);
  int d = static_cast<int>(state.range(0));
  std::vector<int> row(d + 1, 0);
  for (int x = 2; x <= d; ++x) row[x] = x - 1;  // a long ladder
  AModule m = validate_module(spec, {row});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(m));
}
BENCHMARK(BM_CanonicalKey)->Arg(4)->Arg(8)->Arg(12);

static void BM_Enumerate(benchmark::State& state) {
  auto spec = build_free_monoid(1);
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_modules(spec, d));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Arg(5);

static void BM_HallProduct(benchmark::State& state) {
  auto spec = build_free_monoid(1);
  // Product of the largest grade-2 basis elements, uncached per iteration.
  auto keys = enumerate_modules(spec, 2);
  for (auto _ : state)
    for (const auto& a : keys)
      for (const auto& b : keys)
        benchmark::DoNotOptimize(hall_number(
            module_from_key(spec, join_components({a, b})),
            module_from_key(spec, a), module_from_key(spec, b)));
}
BENCHMARK(BM_HallProduct);

static void BM_KreimerCoproduct(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto forests = rooted_forests(n);
  for (auto _ : state)
    for (const auto& enc : forests)
      benchmark::DoNotOptimize(kreimer_coproduct(Forest{enc, n}));
}
BENCHMARK(BM_KreimerCoproduct)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
