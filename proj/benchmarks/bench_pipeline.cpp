#include <benchmark/benchmark.h>

#include <vector>

#include "corpus.hpp"
#include "dim/pipeline.hpp"

namespace {

std::vector<dim::Graph> corpus(dim::Model m, int n) {
  std::vector<dim::Graph> out;
  for (std::uint64_t s = 1; s <= 8; ++s) out.push_back(bench::union_of(m, n, s * 1000));
  return out;
}

void run_solve(benchmark::State& state, dim::Model m) {
  auto graphs = corpus(m, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dim::solve(graphs[i++ % graphs.size()]));
  state.SetComplexityN(state.range(0));
}

void BM_SolveTriangleChain(benchmark::State& s) { run_solve(s, dim::Model::TriangleChain); }
void BM_SolveClawGadget(benchmark::State& s) { run_solve(s, dim::Model::ClawGadget); }
void BM_SolvePathOfTriangles(benchmark::State& s) { run_solve(s, dim::Model::PathOfTriangles); }
void BM_SolveUniform(benchmark::State& s) { run_solve(s, dim::Model::Uniform); }

void BM_SolveLongPathOfTriangles(benchmark::State& state) {
  auto g = dim::generate({dim::Model::PathOfTriangles, static_cast<int>(state.range(0)), 5});
  for (auto _ : state) benchmark::DoNotOptimize(dim::solve(g));
  state.SetComplexityN(state.range(0));
}

void BM_Oracle(benchmark::State& state) {
  auto g = bench::union_of(dim::Model::TriangleChain, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dim::brute_dim(g));
}

}  // namespace

BENCHMARK(BM_SolveTriangleChain)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SolveClawGadget)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SolvePathOfTriangles)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SolveUniform)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_SolveLongPathOfTriangles)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_Oracle)->DenseRange(12, 24, 4);

BENCHMARK_MAIN();
