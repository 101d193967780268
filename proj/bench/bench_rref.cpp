#include <benchmark/benchmark.h>

#include <random>

#include "eqss/matrix.hpp"

namespace {

eqss::Matrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  eqss::Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<eqss::Elem>(value(rng));
  return m;
}

void BM_RrefParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const eqss::Matrix m = random_matrix(251, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(eqss::rref(m));
  state.SetComplexityN(state.range(0));
}

void BM_RrefSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const eqss::Matrix m = random_matrix(251, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(eqss::rref_serial(m));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_RrefParallel)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
