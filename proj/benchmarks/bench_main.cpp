#include <benchmark/benchmark.h>

#include "hopfint/braided.hpp"
#include "hopfint/integrals.hpp"
#include "hopfint/presentation.hpp"

using namespace hopfint;

static void BM_CompileDqs(benchmark::State& state) {
  PresentationAST ast = builtin("dqs");
  for (auto _ : state) benchmark::DoNotOptimize(compile(ast));
}
BENCHMARK(BM_CompileDqs)->Unit(benchmark::kMillisecond);

static void BM_CompileQPlane(benchmark::State& state) {
  PresentationAST ast = builtin("q-plane", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compile(ast));
}
BENCHMARK(BM_CompileQPlane)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_VacuumProjectors(benchmark::State& state) {
  Compiled c = compile(builtin("q-plane", static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_vacuum_projectors(*c.smash));
}
BENCHMARK(BM_VacuumProjectors)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ModifiedTrace(benchmark::State& state) {
  Compiled c = compile(builtin("cyclic-group", static_cast<int>(state.range(0))));
  DualPair p = dualize(c.primary.algebra);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_delta(p));
}
BENCHMARK(BM_ModifiedTrace)->DenseRange(2, 6, 2);

static void BM_QVanishingSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_vanishing_sum(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QVanishingSum)->DenseRange(1, 6);

BENCHMARK_MAIN();
