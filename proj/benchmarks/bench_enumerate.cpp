#include <benchmark/benchmark.h>

#include "infratop/enumerate.hpp"

using namespace infratop;

static void BM_CountLabeled(benchmark::State& state) {
  const EnumConfig cfg{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_spaces(cfg));
}
BENCHMARK(BM_CountLabeled)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CountUpToIso(benchmark::State& state) {
  EnumConfig cfg{static_cast<unsigned>(state.range(0))};
  cfg.up_to_iso = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_spaces(cfg));
}
BENCHMARK(BM_CountUpToIso)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CanonicalCode(benchmark::State& state) {
  const auto codes = collect_codes(EnumConfig{4});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_code(codes[i], 4));
    i = (i + 1) % codes.size();
  }
}
BENCHMARK(BM_CanonicalCode);
