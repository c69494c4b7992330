// Serial reference vs OpenMP kernels, and direct sums vs butterflies.

#include <benchmark/benchmark.h>

#include "negabent/mm.hpp"
#include "negabent/monomials.hpp"
#include "negabent/sampling.hpp"
#include "negabent/spectra.hpp"

using namespace negabent;

static void BM_NegaButterfly(benchmark::State& state) {
  Rng rng(1);
  const BooleanFunction f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(nega(f));
}
BENCHMARK(BM_NegaButterfly)->DenseRange(6, 16, 2);

static void BM_NegaDirect(benchmark::State& state) {
  Rng rng(1);
  const BooleanFunction f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(reference::nega_direct(f));
}
BENCHMARK(BM_NegaDirect)->DenseRange(6, 10, 2);

static void BM_WalshButterfly(benchmark::State& state) {
  Rng rng(1);
  const BooleanFunction f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(walsh(f));
}
BENCHMARK(BM_WalshButterfly)->DenseRange(6, 16, 2);

static void BM_WalshDirect(benchmark::State& state) {
  Rng rng(1);
  const BooleanFunction f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(reference::walsh_direct(f));
}
BENCHMARK(BM_WalshDirect)->DenseRange(6, 10, 2);

// state.range(1): 0 serial, 1 parallel
static void BM_MonomialSweep(benchmark::State& state) {
  const MonomialClass cls(FieldCtx::make(static_cast<int>(state.range(0))), 1);
  const Exec exec = state.range(1) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(cls.sweep(exec));
}
BENCHMARK(BM_MonomialSweep)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_MMCriterion(benchmark::State& state) {
  Rng rng(2);
  const FieldCtx ctx = FieldCtx::make(static_cast<int>(state.range(0)));
  const MMFunction m = mm_build(random_permutation(ctx, rng), random_values(ctx, rng));
  const Exec exec = state.range(1) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(mm_negabent_test(m, exec));
}
BENCHMARK(BM_MMCriterion)->ArgsProduct({{4, 6}, {0, 1}});

static void BM_NegaperiodicAcf(benchmark::State& state) {
  Rng rng(3);
  const BooleanFunction f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(negaperiodic_acf(f));
}
BENCHMARK(BM_NegaperiodicAcf)->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
