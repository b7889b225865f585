#include <vector>

#include <benchmark/benchmark.h>

#include "threeway/oracle.hpp"
#include "threeway/possibility.hpp"
#include "threeway/shadowed.hpp"

namespace {

using namespace threeway;

void BM_DecidePossibility(benchmark::State& state) {
  oracle::CaseGenerator gen(1);
  std::vector<IntervalLossProfile> profiles;
  for (int i = 0; i < 1024; ++i) profiles.push_back(gen.interval_profile());
  std::size_t i = 0;
  for (auto _ : state) {
    const double m = static_cast<double>(i % 101) / 100.0;
    benchmark::DoNotOptimize(decide_possibility(m, profiles[i++ % profiles.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DecidePossibility);

ScalarFuzzySet random_set(std::size_t n) {
  oracle::CaseGenerator gen(2);
  std::vector<double> grades(n);
  for (double& g : grades) g = gen.unit();
  return ScalarFuzzySet::from_grades(grades);
}

void BM_OptimizeBalanced(benchmark::State& state) {
  const ScalarFuzzySet set = random_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_thresholds_balanced(set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimizeBalanced)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ExhaustiveVScan(benchmark::State& state) {
  const ScalarFuzzySet set = random_set(static_cast<std::size_t>(state.range(0)));
  const oracle::GridSpec grid(10000, 0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exhaustive_v_scan(set, grid));
}
BENCHMARK(BM_ExhaustiveVScan)->Arg(100);

void BM_ThresholdScan(benchmark::State& state) {
  const LossProfile p{1.5, 5.5, 3.5, 1.5};
  const oracle::GridSpec grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::threshold_scan(p, grid));
}
BENCHMARK(BM_ThresholdScan)->Arg(1001)->Arg(100001);

void BM_ThresholdsFromLosses(benchmark::State& state) {
  oracle::CaseGenerator gen(3);
  std::vector<LossProfile> profiles;
  for (int i = 0; i < 1024; ++i) profiles.push_back(gen.valid_profile());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(thresholds_from_losses(profiles[i++ % profiles.size()]));
}
BENCHMARK(BM_ThresholdsFromLosses);

}  // namespace

BENCHMARK_MAIN();
