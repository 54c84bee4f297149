#include <benchmark/benchmark.h>

#include "soliton/closed_forms.hpp"
#include "soliton/numeric.hpp"
#include "soliton/phases.hpp"

using namespace soliton;

static void BM_EvalField(benchmark::State& state) {
  const ExpPoly th = two_soliton(-1, Rational(-1, 2), Rational(1, 2), 1).theta;
  Grid g;
  g.x.count = g.y.count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_field(th, Profile::Log, g, Model::KP));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_EvalField)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_FdResidualLine(benchmark::State& state) {
  const ExpPoly th = line_soliton(1, 1, Rational(-1, 2), 1).theta;
  const Grid g;
  for (auto _ : state) benchmark::DoNotOptimize(fd_residual(th, Profile::Log, Model::KP, g, 0.05));
}
BENCHMARK(BM_FdResidualLine)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_FdResidualBreather(benchmark::State& state) {
  const Grid g;
  const FieldFn f = closed::Breather{1.0, 1.0}.field();
  for (auto _ : state) benchmark::DoNotOptimize(fd_residual(f, Model::mKdV, g, 0.05));
}
BENCHMARK(BM_FdResidualBreather)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
