#include <benchmark/benchmark.h>

#include "routh/barycentric.hpp"
#include "routh/identities.hpp"
#include "routh/volume.hpp"

namespace {

routh::CycleRatios above_one(int n) {
  for (std::uint64_t seed = 1;; ++seed) {
    routh::CycleRatios x = routh::sample_ratios(n, seed, 9);
    if (x.regime() == routh::ProductRegime::gt1) return x;
  }
}

void BM_ClosedForm(benchmark::State& state) {
  const auto x = above_one(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(routh::closed_form_volume(x));
}
BENCHMARK(BM_ClosedForm)->Arg(4)->Arg(8)->Arg(20)->Arg(60);

void BM_InclusionExclusion(benchmark::State& state) {
  const auto x = above_one(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(routh::inclusion_exclusion_volume(x));
}
BENCHMARK(BM_InclusionExclusion)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_InclusionExclusionThreaded(benchmark::State& state) {
  const auto x = above_one(20);
  const routh::InclusionExclusionOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(routh::inclusion_exclusion_volume(x, options));
}
BENCHMARK(BM_InclusionExclusionThreaded)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OracleCentral(benchmark::State& state) {
  const auto x = above_one(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(routh::geometry::oracle_central_volume(x));
}
BENCHMARK(BM_OracleCentral)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
