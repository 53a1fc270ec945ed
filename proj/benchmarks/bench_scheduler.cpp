#include <benchmark/benchmark.h>

#include "mcs/baselines.hpp"
#include "mcs/channel.hpp"
#include "mcs/scheduler.hpp"

namespace {

void BM_SwapOptimize(benchmark::State& state) {
  mcs::ScenarioConfig config;
  config.n_users = static_cast<std::size_t>(state.range(0));
  std::uint64_t index = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto instance = mcs::generate_instance(config, index++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(mcs::swap_optimize(instance));
  }
}
BENCHMARK(BM_SwapOptimize)->Arg(12)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_GenerateInstance(benchmark::State& state) {
  mcs::ScenarioConfig config;
  std::uint64_t index = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mcs::generate_instance(config, index++));
}
BENCHMARK(BM_GenerateInstance);

}  // namespace
