#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "dim/long_claw.hpp"

namespace {

void BM_S222Free(benchmark::State& state) {
  auto g = bench::union_of(dim::Model::TriangleChain, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dim::contains_s222(g));
}

void BM_S222Cycle(benchmark::State& state) {
  auto g = dim::generate({dim::Model::Cycle, static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(dim::contains_s222(g));
}

}  // namespace

BENCHMARK(BM_S222Free)->RangeMultiplier(2)->Range(16, 512);
BENCHMARK(BM_S222Cycle)->RangeMultiplier(2)->Range(16, 512);

BENCHMARK_MAIN();
