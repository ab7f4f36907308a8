#include <benchmark/benchmark.h>

#include "cuspcalc/verifier.hpp"

using namespace cuspcalc;

static void BM_discriminant_tw(benchmark::State& state) {
  LinearChain c = tw(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discriminant(c));
  }
}
BENCHMARK(BM_discriminant_tw)->Arg(64)->Arg(512)->Arg(4096);

static void BM_inverse_inductance(benchmark::State& state) {
  Rat q(104729, 1299709);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse_inductance(q));
  }
}
BENCHMARK(BM_inverse_inductance);

static void BM_resolve_cusp(benchmark::State& state) {
  CuspSpec cusp{{Int(state.range(0))}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve_cusp(cusp));
  }
}
BENCHMARK(BM_resolve_cusp)->Arg(8)->Arg(32)->Arg(128);

static void BM_analyze_quintic(benchmark::State& state) {
  CurveSpec quintic = catalog()[1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(quintic));
  }
}
BENCHMARK(BM_analyze_quintic);

BENCHMARK_MAIN();
