#include <benchmark/benchmark.h>

#include "steiner/contraction.hpp"
#include "steiner/generator.hpp"
#include "steiner/lp_gst.hpp"
#include "steiner/oracle.hpp"
#include "steiner/rounding.hpp"
#include "steiner/separator.hpp"

using namespace steiner;

namespace {

void BM_BuildSolveLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GstInstance inst = gen_random_tree_gst(n, 8, 16, 42, "degree", 8);
  for (auto _ : state) {
    const GstLpModel model = build_lp(inst, true);
    const FractionalSolution sol = solve_lp(model, inst);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_BuildSolveLp)->Arg(50)->Arg(100)->Arg(200);

void BM_RoundOnce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GstInstance inst = gen_random_tree_gst(n, 8, 16, 42, "degree", 8);
  const GstLpModel model = build_lp(inst, true);
  const FractionalSolution sol = monotonize(solve_lp(model, inst), inst);
  const RootedTree tree(inst.graph, *inst.root);
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(round_once(tree, inst.graph, sol, rng));
  }
}
BENCHMARK(BM_RoundOnce)->Arg(200);

void BM_BicriteriaSolve(benchmark::State& state) {
  const GstInstance inst = gen_random_tree_gst(200, 8, 16, 42, "degree", 8);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const BicriteriaResult res = solve_bd_gst_tree(inst, rng);
    benchmark::DoNotOptimize(res.iterations);
  }
}
BENCHMARK(BM_BicriteriaSolve);

void BM_SeparatorTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GstInstance inst = gen_bounded_tw_gst(n, 3, 4, 4, 11);
  for (auto _ : state) {
    const SeparatorTree tree = build_separator_tree(inst.graph, 3);
    benchmark::DoNotOptimize(tree.nodes.size());
  }
}
BENCHMARK(BM_SeparatorTree)->Arg(30)->Arg(60);

void BM_BtwPipeline(benchmark::State& state) {
  const GstInstance inst = gen_bounded_tw_gst(40, 2, 3, 4, 13);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const SubTree tree = solve_md_gst_btw(inst, 2, rng);
    benchmark::DoNotOptimize(tree.nodes.size());
  }
}
BENCHMARK(BM_BtwPipeline);

void BM_OracleMdGst(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GstInstance inst = gen_bounded_tw_gst(n, 2, 3, 3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_md_gst(inst).max_degree);
  }
}
BENCHMARK(BM_OracleMdGst)->Arg(10)->Arg(12)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
