#include <benchmark/benchmark.h>

#include "syzcolor/bounds.hpp"
#include "syzcolor/clique_search.hpp"
#include "syzcolor/coloring.hpp"
#include "syzcolor/family.hpp"
#include "syzcolor/homology.hpp"
#include "syzcolor/random_graph.hpp"

using namespace syzcolor;

static void BM_TwoMaximalClique(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = random_gnp(n, 0.05, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_maximal_clique(g));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_TwoMaximalClique)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity();

static void BM_Color(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = random_gnp(n, 0.05, 1);
  ColorOptions opts;
  opts.exact_omega_limit = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(color(g, {6, 2}, opts));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Color)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity();

static void BM_ColorDense(benchmark::State &state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 0.5, 2);
  ColorOptions opts;
  opts.exact_omega_limit = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(color(g, {9, 3}, opts));
  }
}
BENCHMARK(BM_ColorDense)->Arg(200)->Arg(800);

static void BM_ReducedHomology(benchmark::State &state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_homology(g, HomologyField::rationals(), 24));
  }
}
BENCHMARK(BM_ReducedHomology)->DenseRange(8, 16, 4);

static void BM_BettiVanishes(benchmark::State &state) {
  Graph g = random_gnp(12, 0.5, 4);
  BettiOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti(g, {3, 7}, opts));
  }
}
BENCHMARK(BM_BettiVanishes)->Arg(1)->Arg(2);

static void BM_FamilyFree(benchmark::State &state) {
  Graph g = random_gnp(12, 0.5, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_family_free(g, {6, 2}));
  }
}
BENCHMARK(BM_FamilyFree);

static void BM_GEvalCold(benchmark::State &state) {
  int n = 40;
  for (auto _ : state) {
    // new n each round so the memo table does not answer directly
    benchmark::DoNotOptimize(g_eval(n++, 6, 20));
  }
}
BENCHMARK(BM_GEvalCold);

BENCHMARK_MAIN();
