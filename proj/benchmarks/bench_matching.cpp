#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dim/matching.hpp"
#include "dim/setmatch.hpp"

namespace {

dim::Graph random_graph(int n, double avg_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(avg_degree / std::max(1, n - 1));
  std::vector<dim::Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) es.emplace_back(a, b);
  return dim::Graph(n, es);
}

void BM_MaxMatching(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 4.0, 7);
  for (auto _ : state) benchmark::DoNotOptimize(dim::max_matching(g));
}

void BM_Saturation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_graph(n, 4.0, 8);
  std::vector<dim::VertexId> req;
  for (int v = 0; v < n; v += 3) req.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(dim::solve_saturation(g, req));
}

void BM_Hitting(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  // A chain of triples sharing one element with each neighbour.
  dim::SetFamilyInstance inst;
  for (int i = 0; i < k; ++i) inst.sets.push_back({2 * i, 2 * i + 1, 2 * i + 2});
  for (int x = 0; x <= 2 * k; ++x) inst.ground.push_back(x);
  for (auto _ : state) benchmark::DoNotOptimize(dim::solve_hitting(inst));
}

}  // namespace

BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Saturation)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Hitting)->RangeMultiplier(4)->Range(16, 4096);

BENCHMARK_MAIN();
