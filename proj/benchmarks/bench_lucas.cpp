#include <benchmark/benchmark.h>

#include "binomcong/lucas.hpp"

using namespace binomcong;

static void BM_LucasFastDoubling(benchmark::State& state) {
  const PrimeModulus p(4294967291ULL);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lucas_uv_mod(Residue(9, p), Residue(3, p), n));
}
BENCHMARK(BM_LucasFastDoubling)->RangeMultiplier(16)->Range(16, 1 << 28);

static void BM_LucasExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lucas_uv_exact(9, -3, n));
}
BENCHMARK(BM_LucasExact)->Arg(50)->Arg(500);

BENCHMARK_MAIN();
