#include <benchmark/benchmark.h>

#include "vmlab/canonical.hpp"
#include "vmlab/commute.hpp"
#include "vmlab/flip.hpp"
#include "vmlab/rng.hpp"
#include "vmlab/search.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

namespace {

using namespace vmlab;

static void BM_apply_flip(benchmark::State& state) {
  Rng rng(1);
  Graph g = random_graph(rng, static_cast<int>(state.range(0)), 50);
  Flip f = random_flip(rng, g, 4);
  for (auto _ : state) {
    Graph out = apply_flip(g, f);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_apply_flip)->Arg(8)->Arg(12)->Arg(10);

static void BM_local_complement_set(benchmark::State& state) {
  Rng rng(2);
  Graph g = random_graph(rng, static_cast<int>(state.range(0)), 40);
  VertexSet iset = random_independent_set(rng, g);
  for (auto _ : state) {
    Graph out = local_complement_set(g, iset);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_local_complement_set)->Arg(8)->Arg(12);

static void BM_commute0(benchmark::State& state) {
  Rng rng(3);
  Graph g = random_graph(rng, static_cast<int>(state.range(0)), 50);
  Flip f = random_flip(rng, g, 4);
  Graph flipped = apply_flip(g, f);
  VertexSet iset = random_common_independent_set(rng, g, flipped);
  for (auto _ : state) {
    Flip out = commute0(g, f, iset);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_commute0)->Arg(8)->Arg(12);

static void BM_canonical_form(benchmark::State& state) {
  Rng rng(4);
  Graph g = random_graph(rng, static_cast<int>(state.range(0)), 50);
  for (auto _ : state) {
    CanonicalForm cf = canonical_form(g);
    benchmark::DoNotOptimize(cf);
  }
}
BENCHMARK(BM_canonical_form)->Arg(6)->Arg(8)->Arg(10);

static void BM_containment_depth1(benchmark::State& state) {
  Rng rng(5);
  Graph g = random_graph(rng, 7, 40);
  VertexSet iset = random_independent_set(rng, g);
  Graph h = local_complement_set(g, iset).without({0});
  for (auto _ : state) {
    auto res = is_depth_r_vminor(g, h, 1);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_containment_depth1);

}  // namespace

BENCHMARK_MAIN();
