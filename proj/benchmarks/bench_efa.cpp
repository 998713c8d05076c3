#include <benchmark/benchmark.h>

#include "efa/enumerate.hpp"
#include "efa/models.hpp"
#include "efa/properties.hpp"
#include "efa/theorems.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(efa::enumerate_up_to_iso(n).models.size());
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const efa::EnumerationOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(efa::enumerate_up_to_iso(8, options).models.size());
}
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ProfileEvenSubsets(benchmark::State& state) {
  const efa::Model m(efa::even_subset_omp(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(efa::profile(m).omp);
}
BENCHMARK(BM_ProfileEvenSubsets)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ProfileChain(benchmark::State& state) {
  const efa::Model m(efa::chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(efa::profile(m).lattice);
}
BENCHMARK(BM_ProfileChain)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto b = efa::boolean_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(efa::canonical_form(b));
}
BENCHMARK(BM_CanonicalForm)->Arg(2)->Arg(3);

void BM_TheoremsExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(efa::run_exhaustive(7));
}
BENCHMARK(BM_TheoremsExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
