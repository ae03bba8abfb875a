#include <benchmark/benchmark.h>

#include "binomcong/registry.hpp"

using namespace binomcong;

static void BM_VerifyRange(benchmark::State& state, const char* id) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_range(id, limit));
}
BENCHMARK_CAPTURE(BM_VerifyRange, cor_2_1, "cor-2.1")->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyRange, thm_3_8, "thm-3.8")->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyRange, thm_2_10, "thm-2.10")->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_VerifyJobs(benchmark::State& state) {
  const VerifyOptions opts{static_cast<std::size_t>(state.range(0)), 1, false};
  for (auto _ : state) benchmark::DoNotOptimize(verify_range("thm-2.1", 3000, opts));
}
BENCHMARK(BM_VerifyJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
