#include <benchmark/benchmark.h>

#include "permpat/moments.hpp"
#include "permpat/profile.hpp"
#include "permpat/qfield.hpp"
#include "permpat/rep.hpp"

using namespace permpat;

static void BM_CountPatterns(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  Rng rng(1);
  const auto pi = sample_uniform(n, rng);
  std::vector<std::uint64_t> counts(factorial(k));
  for (auto _ : state) {
    count_patterns(pi.one_line(), k, counts);
    benchmark::DoNotOptimize(counts.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(n, k)));
}
BENCHMARK(BM_CountPatterns)->Args({10, 3})->Args({40, 3})->Args({160, 3})->Args({40, 4})->Args({80, 4});

static void BM_OuterSum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(outer_sum(k, n).entries.data());
}
BENCHMARK(BM_OuterSum)->Args({2, 6})->Args({3, 7})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_BuildBasis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_U(k).size());
}
BENCHMARK(BM_BuildBasis)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_QNumMultiply(benchmark::State& state) {
  const QNum a = parse_qnum("1/2+1/3√6-2/5√35");
  const QNum b = parse_qnum("3/7√2+1/11√15");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QNumMultiply);

BENCHMARK_MAIN();
