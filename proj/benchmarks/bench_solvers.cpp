#include <benchmark/benchmark.h>

#include <random>

#include "ndfas/branching.hpp"
#include "ndfas/decomp.hpp"
#include "ndfas/dp.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/oracle.hpp"
#include "ndfas/pm_one.hpp"
#include "ndfas/skew.hpp"

using namespace ndfas;

namespace {

WeightedDigraph pm_one_graph(int n, int m, int positives, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto raw = random_digraph(n, m, -1, -1, rng);
  WeightedDigraph g(n);
  for (const Arc& a : raw.arcs()) g.add_arc(a.tail, a.head, a.id < positives ? 1 : -1);
  return g;
}

}  // namespace

static void BM_ShortestNegativeCycle(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto g = random_digraph(n, 3 * n, -2, 5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_negative_cycle(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ShortestNegativeCycle)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_GallaiPotential(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto g = random_digraph(n, 4 * n, 0, 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_feasible_potential(g));
}
BENCHMARK(BM_GallaiPotential)->RangeMultiplier(4)->Range(16, 1024);

static void BM_TdPlusKHub(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto g = gen_hub_triangles(static_cast<int>(state.range(0)), -3, 3, rng);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_td_plus_k(g, k));
}
BENCHMARK(BM_TdPlusKHub)->Args({16, 2})->Args({16, 4})->Args({32, 4})->Unit(benchmark::kMillisecond);

static void BM_DpTwWminus(benchmark::State& state) {
  std::mt19937_64 rng(4);
  auto base = gen_partial_ktree(static_cast<int>(state.range(0)), 3, 0.7, 0, 0, rng);
  WeightedDigraph g(base.vertex_count());
  for (const Arc& a : base.arcs()) g.add_arc(a.tail, a.head, a.id % 7 == 0 ? -1 : (a.id % 3 == 0 ? 1 : 0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_tw_wminus(g, 3));
  state.counters["w_minus"] = g.w_minus();
}
BENCHMARK(BM_DpTwWminus)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_Pm1FewPositive(benchmark::State& state) {
  const auto g = pm_one_graph(8, 14, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimum([&](int b) { return solve_pm1_few_positive(g, b); }, 3));
}
BENCHMARK(BM_Pm1FewPositive)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Pm1FewNegative(benchmark::State& state) {
  const auto g = pm_one_graph(8, 14, 14 - static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimum([&](int b) { return solve_pm1_few_negative(g, b); }, 3));
}
BENCHMARK(BM_Pm1FewNegative)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_SkewSeparator(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto g = random_digraph(12, 30, 0, 0, rng);
  const SkewInstance inst{g, {{0}, {1}, {2}}, {{3}, {4}, {5}}, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(solve_skew_separator(inst));
}
BENCHMARK(BM_SkewSeparator)->DenseRange(1, 4);

static void BM_NonzeroCount(benchmark::State& state) {
  std::mt19937_64 rng(8);
  WeightedDigraph g = random_digraph(7, 10, 0, 0, rng);
  const int nonzero = static_cast<int>(state.range(0));
  WeightedDigraph h(7);
  for (const Arc& a : g.arcs()) h.add_arc(a.tail, a.head, a.id < nonzero ? (a.id == 0 ? 1 : -1) : 0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_nonzero_count(h, 1));
  state.counters["w_minus"] = h.w_minus();
}
BENCHMARK(BM_NonzeroCount)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_OracleBruteForce(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const auto g = random_digraph(8, 16, -3, 1, rng);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ndfas(g, k));
}
BENCHMARK(BM_OracleBruteForce)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TreeDecomposition(benchmark::State& state) {
  std::mt19937_64 rng(10);
  const auto g = gen_partial_ktree(static_cast<int>(state.range(0)), 3, 0.8, 0, 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(make_nice(g, compute_tree_decomposition(g)));
}
BENCHMARK(BM_TreeDecomposition)->Arg(12)->Arg(60)->Arg(200);

BENCHMARK_MAIN();
