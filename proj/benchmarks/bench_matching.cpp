#include <benchmark/benchmark.h>

#include <random>

#include "mcs/matching.hpp"

namespace {

mcs::WeightMatrix random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> pick(1e5, 1e7);
  std::vector<double> entries(n * n);
  for (double& e : entries) e = pick(gen);
  std::vector<mcs::UserId> users(n);
  for (std::size_t c = 0; c < n; ++c) users[c] = c;
  return mcs::WeightMatrix(n, std::move(entries), std::move(users));
}

// Cubic growth shows up as ~8x per doubling of N.
void BM_HungarianAssign(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mcs::hungarian_assign(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HungarianAssign)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_HungarianReduce(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mcs::hungarian_reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HungarianReduce)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
