#include <benchmark/benchmark.h>

#include <array>

#include "mayer/bounds.hpp"
#include "mayer/potentials.hpp"
#include "mayer/simplex.hpp"
#include "mayer/ursell.hpp"

using namespace mayer;

static void BM_GraphSum(benchmark::State& state) {
  const InteractionMatrix m = InteractionMatrix::random(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(ursell_graph_sum(m, 1.0));
}
BENCHMARK(BM_GraphSum)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_PartitionSum(benchmark::State& state) {
  const InteractionMatrix m = InteractionMatrix::random(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(ursell_partition_sum(m, 1.0));
}
BENCHMARK(BM_PartitionSum)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_SimplexLinear(benchmark::State& state) {
  const std::array<double, 3> w{0.4, -1.2, 2.5};
  for (auto _ : state) benchmark::DoNotOptimize(ordered_simplex_linear_integral(w, 1.0, 1e-8));
}
BENCHMARK(BM_SimplexLinear)->Unit(benchmark::kMicrosecond);

static void BM_TreeIntegral(benchmark::State& state) {
  const InteractionMatrix m = InteractionMatrix::random(4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ursell_tree_integral(m, 1.0, 1e-7));
}
BENCHMARK(BM_TreeIntegral)->Unit(benchmark::kMillisecond);

static void BM_CHatLennardJones(benchmark::State& state) {
  const PairPotential lj = PairPotential::lennard_jones();
  for (auto _ : state) benchmark::DoNotOptimize(basuev_c_hat(lj, 0.6397, 1.0, 1.001 * 8.61).radius);
}
BENCHMARK(BM_CHatLennardJones)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
