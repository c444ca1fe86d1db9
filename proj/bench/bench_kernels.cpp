// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "repnum/constructions.hpp"
#include "repnum/oracle.hpp"

using namespace repnum;

namespace {

SimpleGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) g.set_edge(u, v);
  return g;
}

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sweep_serial(n, 3, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(oracle::labeled_count(n)));
}

void BM_SweepParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sweep(n, 3, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(oracle::labeled_count(n)));
}

// k close to n forces the search deep into the subset levels.
void BM_MinDeletionsSerial(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::min_deletions(g, 8, g.order()));
}

void BM_MinDeletionsParallel(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::min_deletions_parallel(g, 8, g.order()));
}

void BM_SamplerSerial(benchmark::State& state) {
  const auto g = constructions::dn_graph(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(constructions::sample_induced_rep(g, 1000, 7));
}

void BM_SamplerParallel(benchmark::State& state) {
  const auto g = constructions::dn_graph(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(constructions::sample_induced_rep_parallel(g, 1000, 7));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDeletionsSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDeletionsParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplerSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplerParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
