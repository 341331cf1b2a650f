#include <benchmark/benchmark.h>

#include <random>

#include "ratlab/matrices.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/rules.hpp"

using namespace ratlab;

static void BM_ClassifySubtraction(benchmark::State& state) {
  const Dimension d(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<HeapVector> inputs;
  for (int k = 0; k < 1024; ++k) {
    std::vector<Int> s(static_cast<std::size_t>(d.value()));
    for (auto& v : s) v = static_cast<Int>(rng() % 1'000'000);
    inputs.emplace_back(std::move(s));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_subtraction(d, inputs[i++ & 1023]).status);
  }
}
BENCHMARK(BM_ClassifySubtraction)->Arg(3)->Arg(8)->Arg(32);

static void BM_WinningMove(benchmark::State& state) {
  const Dimension d(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  std::vector<HeapVector> inputs;
  for (int k = 0; k < 256; ++k) {
    std::vector<Int> x(static_cast<std::size_t>(d.value()));
    for (int j = 1; j <= d.value(); ++j) x[j - 1] = static_cast<Int>(rng() % 1000) * pow2(j - 1);
    inputs.emplace_back(std::move(x));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(winning_move(inputs[i++ & 255]));
}
BENCHMARK(BM_WinningMove)->Arg(3)->Arg(6);

static void BM_BuildShortcutMatrix(benchmark::State& state) {
  const Dimension d(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_shortcut_matrix(d).rows.rows());
}
BENCHMARK(BM_BuildShortcutMatrix)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_RetrogradeSolve(benchmark::State& state) {
  const oracle::Box box = oracle::Box::cube(Dimension(3), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::retrograde_solve(box).outcome.size());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * box.cells()));
}
BENCHMARK(BM_RetrogradeSolve)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
