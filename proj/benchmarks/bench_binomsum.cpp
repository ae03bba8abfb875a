#include <benchmark/benchmark.h>

#include "binomcong/binomsum.hpp"
#include "binomcong/combsum.hpp"

using namespace binomcong;

static void BM_SumBinomPow(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const Residue ratio = rational_residue(Rational(-1, 27), p);
  for (auto _ : state) benchmark::DoNotOptimize(sum_binom_pow(3, 1, ratio, p.value() / 3));
}
BENCHMARK(BM_SumBinomPow)->Arg(1009)->Arg(100003)->Arg(1000003);

static void BM_BinomModGeneral(benchmark::State& state) {
  const PrimeModulus p(10007);
  for (auto _ : state) benchmark::DoNotOptimize(binom_mod_general(30000000, 12345678, p));
}
BENCHMARK(BM_BinomModGeneral);

static void BM_TSumExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_sum_exact({n, 10, 0}));
}
BENCHMARK(BM_TSumExact)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
