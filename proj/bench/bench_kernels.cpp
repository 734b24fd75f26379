// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <numeric>

#include "trigsum/catalog.hpp"
#include "trigsum/ntheory.hpp"
#include "trigsum/rhcriterion.hpp"

using namespace trigsum;

static void BM_FareySumReference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rh::farey_chi_sine_sum_reference(st.range(0)));
}
BENCHMARK(BM_FareySumReference)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_FareySumParallel(benchmark::State& st) {
  for (auto _ : st) {
    auto t = rh::denominator_terms_fast(st.range(0));
    benchmark::DoNotOptimize(std::accumulate(t.begin(), t.end(), 0.0));
  }
}
BENCHMARK(BM_FareySumParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_FareySumHighPrec(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rh::denominator_terms(st.range(0), Precision(256)));
}
BENCHMARK(BM_FareySumHighPrec)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_MobiusSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ntheory::mobius_sieve_serial(st.range(0)));
}
BENCHMARK(BM_MobiusSerial)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

static void BM_MobiusParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ntheory::mobius_sieve_parallel(st.range(0)));
}
BENCHMARK(BM_MobiusParallel)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

static void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(catalog::sweep_serial("I24", st.range(0), Precision(256)));
}
BENCHMARK(BM_SweepSerial)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(catalog::sweep("I24", st.range(0), Precision(256)));
}
BENCHMARK(BM_SweepParallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
