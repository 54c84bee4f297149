#include <benchmark/benchmark.h>

#include <vector>

#include "soliton/cones.hpp"
#include "soliton/dsl.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"
#include "soliton/random.hpp"

using namespace soliton;

namespace {

// k_i = 2^i: squares are powers of 4, so all pair sums differ
Phase resonant_of(int m) {
  std::vector<Rational> a, k;
  for (int i = 0; i < m; ++i) {
    a.push_back(Rational(i + 1));
    k.push_back(Rational(1 << i));
  }
  return resonant(a, k);
}

}  // namespace

static void BM_Product(benchmark::State& state) {
  RandomSource rng(1);
  const ExpPoly a = rng.exppoly(VarSet::kp(), static_cast<int>(state.range(0)), 2);
  const ExpPoly b = rng.exppoly(VarSet::kp(), static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Product)->Arg(4)->Arg(16)->Arg(64);

static void BM_Diff(benchmark::State& state) {
  const ExpPoly th = two_soliton(-3, -1, 2, 5).theta;
  for (auto _ : state) benchmark::DoNotOptimize(diff(th, "x", 4));
}
BENCHMARK(BM_Diff);

static void BM_KpResidualResonant(benchmark::State& state) {
  const ExpPoly th = resonant_of(static_cast<int>(state.range(0))).theta;
  for (auto _ : state) benchmark::DoNotOptimize(kp_residual_cleared(th));
}
BENCHMARK(BM_KpResidualResonant)->DenseRange(1, 6);

static void BM_KpResidualTwoSoliton(benchmark::State& state) {
  const ExpPoly th = two_soliton(-3, -1, 2, 5).theta;
  for (auto _ : state) benchmark::DoNotOptimize(kp_residual_cleared(th));
}
BENCHMARK(BM_KpResidualTwoSoliton);

static void BM_Classify(benchmark::State& state) {
  const ExpPoly th = two_soliton(-3, -1, 2, 5).theta;
  for (auto _ : state) benchmark::DoNotOptimize(classify(th));
}
BENCHMARK(BM_Classify);

static void BM_Reconstruct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto d = decompose(wy_cleared(resonant_of(m).theta).expr);
  for (auto _ : state) {
    auto r = reconstruct_resonant(d, m);
    if (!r.ok()) state.SkipWithError(r.diagnostic.c_str());
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Reconstruct)->DenseRange(3, 6);

static void BM_Parse(benchmark::State& state) {
  const std::string text = "galilean(wr(line(1,1,-1,0),line(1,1,1,2)),1/3)";
  for (auto _ : state) benchmark::DoNotOptimize(dsl::parse_phase(text));
}
BENCHMARK(BM_Parse);
