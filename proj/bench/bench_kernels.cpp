#include <benchmark/benchmark.h>

#include "shuffle/bialgebra.hpp"
#include "shuffle/generators.hpp"

using namespace shuffle;

namespace {

// (k1, k2): P_{k1,1} * P_{k2,-1}
void product_args(benchmark::internal::Benchmark* b) {
  b->Args({1, 1})->Args({2, 1})->Args({2, 2})->Args({3, 2});
}

void BM_shuffle_mul(benchmark::State& state) {
  ShuffleElement a = build_P(static_cast<int>(state.range(0)), 1), b = build_P(static_cast<int>(state.range(1)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul(a, b));
}

void BM_shuffle_mul_serial(benchmark::State& state) {
  ShuffleElement a = build_P(static_cast<int>(state.range(0)), 1), b = build_P(static_cast<int>(state.range(1)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul_serial(a, b));
}

// word of length k paired with P_{k,1}
WordExpression word_for(int k) {
  WordExpression::Word w(k, 0);
  w.back() = 1;
  return WordExpression::word(w);
}

void BM_pair(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ShuffleElement p = build_P(k, 1);
  WordExpression w = word_for(k);
  for (auto _ : state) benchmark::DoNotOptimize(pair_word_element(w, p));
}

void BM_pair_serial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ShuffleElement p = build_P(k, 1);
  WordExpression w = word_for(k);
  for (auto _ : state) benchmark::DoNotOptimize(pair_word_element_serial(w, p));
}

}  // namespace

BENCHMARK(BM_shuffle_mul)->Apply(product_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shuffle_mul_serial)->Apply(product_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
