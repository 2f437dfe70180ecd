#include <benchmark/benchmark.h>

#include "infratop/enumerate.hpp"
#include "infratop/tables.hpp"

using namespace infratop;

static void BM_SpaceTables(benchmark::State& state) {
  const auto spaces = enumerate_spaces(EnumConfig{static_cast<unsigned>(state.range(0))});
  std::size_t i = 0;
  for (auto _ : state) {
    SpaceTables t(spaces[i]);
    benchmark::DoNotOptimize(t.membership(t.full()));
    i = (i + 1) % spaces.size();
  }
}
BENCHMARK(BM_SpaceTables)->DenseRange(3, 5);
