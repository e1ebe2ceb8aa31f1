#include <benchmark/benchmark.h>

#include "fraccalc/analytic.hpp"
#include "fraccalc/frac_derivative.hpp"
#include "fraccalc/frac_integral.hpp"
#include "fraccalc/norms.hpp"

using namespace fraccalc;

static void BM_FracInt(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Grid g(Interval(0.0, 1.0), n);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  FracOrder s(0.5);
  for (auto _ : state) {
    GridFunction v = frac_int(u, s);
    benchmark::DoNotOptimize(v.values.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FracInt)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_FracDerivRL(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Grid g(Interval(0.0, 1.0), n);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  FracOrder s(0.5);
  for (auto _ : state) {
    GridFunction v = frac_deriv(u, s, DerivKind::RiemannLiouville);
    benchmark::DoNotOptimize(v.values.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FracDerivRL)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_Marchaud(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Grid g(Interval(0.0, 1.0), n);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  FracOrder s(0.5);
  for (auto _ : state) {
    GridFunction v = frac_deriv(u, s, DerivKind::Marchaud);
    benchmark::DoNotOptimize(v.values.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Marchaud)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

// the double sum is the most expensive kernel in the library
static void BM_Gagliardo(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Grid g(Interval(0.0, 1.0), n);
  GridFunction u = sample(AnalyticFunction::cosine(), g);
  FracOrder s(0.5);
  for (auto _ : state) {
    double v = gagliardo_seminorm_value(u, s, 2.0);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Gagliardo)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

BENCHMARK_MAIN();
