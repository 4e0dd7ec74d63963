#include <benchmark/benchmark.h>

#include <numbers>

#include "cograte/achievable.hpp"
#include "cograte/bounds.hpp"
#include "cograte/feedback.hpp"
#include "cograte/mc.hpp"

namespace {

using namespace cograte;

const ChannelParams kCp{10.0, 10.0, 1.0};

void BM_AchievableRate(benchmark::State& state) {
  const PhaseBudget budget{std::numbers::pi / 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(achievable_rate(kCp, budget).rate);
  }
}
BENCHMARK(BM_AchievableRate)->Unit(benchmark::kMicrosecond);

void BM_OutageLowerBound(benchmark::State& state) {
  const FadeModel fade = FadeModel::rayleigh(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(outage_lower_bound(kCp, fade, 2.0));
  }
}
BENCHMARK(BM_OutageLowerBound)->Unit(benchmark::kMicrosecond);

void BM_RateVsOutage(benchmark::State& state) {
  const FadeModel fade = FadeModel::rayleigh(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rate_vs_outage(kCp, fade, 0.1));
  }
}
BENCHMARK(BM_RateVsOutage)->Unit(benchmark::kMillisecond);

void BM_OptimizeSectors(benchmark::State& state) {
  const ChannelParams low(0.01, db_to_linear(25.0), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_sectors(low, static_cast<int>(state.range(0))).rate);
  }
}
BENCHMARK(BM_OptimizeSectors)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EffectiveRateContiguous(benchmark::State& state) {
  const FeedbackPlan plan =
      FeedbackPlan::with_default_grids(kCp, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(effective_rate_contiguous(kCp, plan).rate);
  }
}
BENCHMARK(BM_EffectiveRateContiguous)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_McLlseError(benchmark::State& state) {
  const SampleBatch batch{1234, state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_llse_error(kCp, 0.5, 0.4, 0.4, batch).mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McLlseError)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
