#include <benchmark/benchmark.h>

#include "cliquemerge/generators.hpp"
#include "cliquemerge/oracles.hpp"
#include "cliquemerge/phase1.hpp"
#include "cliquemerge/phase2.hpp"
#include "cliquemerge/queries.hpp"

namespace {

using namespace cliquemerge;

Graph complete_graph(std::size_t n) {
  return generate({.kind = GeneratorKind::Complete, .n = n}).graph;
}

Graph gnp_graph(std::size_t n) {
  return generate({.kind = GeneratorKind::Gnp, .n = n, .p = 0.5, .seed = 7}).graph;
}

void BM_Phase1Complete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_phase1(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Phase1Complete)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Phase2Complete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  const auto tables = run_phase1(g).tables;
  for (auto _ : state) benchmark::DoNotOptimize(run_phase2(g, tables));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Phase2Complete)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_CalculationGnp(benchmark::State& state) {
  const Graph g = gnp_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(do_calculation(g));
}
BENCHMARK(BM_CalculationGnp)->RangeMultiplier(2)->Range(16, 128);

void BM_BronKerboschGnp(benchmark::State& state) {
  const Graph g = gnp_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bron_kerbosch_pivot(g));
}
BENCHMARK(BM_BronKerboschGnp)->RangeMultiplier(2)->Range(16, 128);

void BM_ParallelCalculationGnp(benchmark::State& state) {
  const Graph g = gnp_graph(128);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(do_calculation(g, {.workers = workers}));
}
BENCHMARK(BM_ParallelCalculationGnp)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
