#include <benchmark/benchmark.h>

#include <vector>

#include "ngon/distinguish.hpp"
#include "ngon/mixing.hpp"
#include "ngon/polygon.hpp"

using namespace ngon;

static void BM_EvaluateTable(benchmark::State& state) {
  const PolygonSpec spec = PolygonSpec::finite(static_cast<int>(state.range(0)));
  const int n = spec.sides();
  std::vector<EffectVector> effects;
  std::vector<StateVector> states;
  for (int i = 0; i < n; ++i) {
    effects.push_back(pure_effect(spec, i));
    states.push_back(pure_state(spec, i));
  }
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& e : effects) {
      for (const auto& s : states) acc += evaluate(e, s);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EvaluateTable)->Arg(6)->Arg(12)->Arg(32);

static void BM_LpPair(benchmark::State& state) {
  const PolygonSpec spec = PolygonSpec::finite(static_cast<int>(state.range(0)));
  const std::vector<StateVector> pair{pure_state(spec, 0),
                                      pure_state(spec, spec.sides() / 2)};
  for (auto _ : state) {
    auto w = lp_distinguishable(spec, pair);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_LpPair)->Arg(6)->Arg(12);

static void BM_VerifyTheorem(benchmark::State& state) {
  const PolygonSpec spec = PolygonSpec::finite(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = verify_theorem(spec);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyTheorem)->Arg(5)->Arg(21)->Arg(32);

BENCHMARK_MAIN();
