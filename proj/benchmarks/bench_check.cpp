#include <benchmark/benchmark.h>

#include "infratop/enumerate.hpp"
#include "infratop/implications.hpp"
#include "infratop/theorems.hpp"

using namespace infratop;

static void BM_CheckRegistry(benchmark::State& state) {
  const auto spaces = enumerate_spaces(EnumConfig{static_cast<unsigned>(state.range(0))});
  CheckAllOptions opts;
  opts.throw_on_forced = false;
  for (auto _ : state) benchmark::DoNotOptimize(check_all(spaces, opts));
  state.counters["spaces"] = static_cast<double>(spaces.size());
}
BENCHMARK(BM_CheckRegistry)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_ImplicationMatrix(benchmark::State& state) {
  const auto spaces = enumerate_up_to(4);
  for (auto _ : state) benchmark::DoNotOptimize(implication_matrix(spaces, all_classes()));
}
BENCHMARK(BM_ImplicationMatrix)->Unit(benchmark::kMillisecond);
