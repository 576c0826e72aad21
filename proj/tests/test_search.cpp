#include <doctest.h>

#include "vmlab/canonical.hpp"
#include "vmlab/families.hpp"
#include "vmlab/search.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

#include "testutil.hpp"

using namespace vmlab;
using namespace vmlab::test;

namespace {

// Split interval host whose star point complementation yields the half
// graph: points b_j at 2j, intervals A_i = [2i, 2n+1], one extra stable
// point c at 2n+1 inside every interval.
IntervalModel half_graph_host_model(int n) {
  IntervalModel model;
  for (int j = 1; j <= n; ++j) model.points.push_back({j - 1, Rational(2 * j)});
  model.points.push_back({n, Rational(2 * n + 1)});  // c
  for (int i = 1; i <= n; ++i)
    model.intervals.push_back({n + i, Rational(2 * i), Rational(2 * n + 1)});
  return model;
}

bool witness_replays_to(const Graph& g, const ContainmentResult& res, const Graph& h) {
  if (!res.found) return false;
  Graph replay = apply_witness(g, *res.witness);
  if (replay.order() != h.order()) return false;
  for (VertexId u : h.vertices())
    for (VertexId v : h.vertices()) {
      if (u >= v) continue;
      if (h.adjacent(u, v) != replay.adjacent(res.embedding->at(u), res.embedding->at(v)))
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("containment finds the graph itself with an empty witness") {
  Rng rng(4100);
  Graph g = random_graph(rng, 7, 50);
  auto res = is_depth_r_vminor(g, g, 2);
  REQUIRE(res.found);
  CHECK(res.witness->steps.empty());
  CHECK(res.witness->deletions.empty());
  CHECK(witness_replays_to(g, res, g));
}

TEST_CASE("containment caps fail loudly") {
  Graph big = edgeless_graph(11);
  CHECK_THROWS_AS(is_depth_r_vminor(big, big, 1), CapacityError);
  Graph small = edgeless_graph(3);
  CHECK_THROWS_AS(is_depth_r_vminor(small, small, 4), CapacityError);
  SearchCaps wide;
  wide.max_order = 12;
  wide.canonical_cap = 12;
  CHECK(is_depth_r_vminor(big, big, 1, wide).found);
}

TEST_CASE("C3 is a depth-1 vertex minor of C6, matching the subdivision witness") {
  Graph c6 = cycle_graph(6);
  Graph c3 = complete_graph(3);
  auto res = is_depth_r_vminor(c6, c3, 1);
  REQUIRE(res.found);
  CHECK(res.witness->depth() == 1);
  CHECK(witness_replays_to(c6, res, c3));
  // and not at depth 0
  CHECK(!is_depth_r_vminor(c6, c3, 0).found);
}

TEST_CASE("every half graph up to n = 4 sits at depth 1 inside a split interval host") {
  for (int n = 1; n <= 4; ++n) {
    IntervalModel model = half_graph_host_model(n);
    Graph host = interval_model_graph(model);
    REQUIRE(host.order() == 2 * n + 1);
    Graph hg = half_graph(n).graph;
    auto res = is_depth_r_vminor(host, hg, 1);
    REQUIRE(res.found);
    REQUIRE(witness_replays_to(host, res, hg));
  }
}

TEST_CASE("planted witnesses are found and monotone in depth") {
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    Rng rng(4200 + t);
    int n = rng.uniform(4, 7);
    Graph g = random_graph(rng, n, rng.uniform(20, 70));
    int depth = rng.uniform(1, 2);
    VMinorWitness w;
    Graph cur = g;
    for (int d = 0; d < depth; ++d) {
      VertexSet iset = random_independent_set(rng, cur);
      w.steps.push_back(iset);
      cur = local_complement_set(cur, iset);
    }
    for (VertexId v : g.vertices())
      if (rng.percent(25) && cur.order() > 2) cur = cur.without({v});
    Graph h = cur;

    auto res = is_depth_r_vminor(g, h, depth);
    REQUIRE(res.found);
    REQUIRE(witness_replays_to(g, res, h));
    ++found;
    if (depth == 1 && n <= 6) {
      auto res2 = is_depth_r_vminor(g, h, 2);
      REQUIRE(res2.found);  // svm_r is monotone in r
    }
  }
  CHECK(found == 60);
}

TEST_CASE("dedup statistics are reported") {
  Graph c5 = cycle_graph(5);
  auto res = is_depth_r_vminor(c5, complete_graph(5), 2);
  CHECK(res.stats.nodes_explored > 0);
  CHECK(res.stats.dedup_hits > 0);
}

TEST_CASE("flip scatter oracle") {
  Rng rng(4300);
  Graph g = random_graph(rng, 6, 50);
  VertexSet all = g.vertex_set();
  // r = 1 is free: distinct vertices are at distance >= 1
  CHECK(flip_scatter_max(g, all, 1, 1) == 6);
  // edgeless graph with the zero flip available
  Graph e5 = edgeless_graph(5);
  CHECK(flip_scatter_max(e5, e5.vertex_set(), 4, 1) == 5);
  // the complement flip isolates a clique completely
  for (int n = 3; n <= 6; ++n) {
    Graph k = complete_graph(n);
    CHECK(flip_scatter_max(k, k.vertex_set(), 3, 1) == n);
  }
  CHECK_THROWS_AS(flip_scatter_max(edgeless_graph(9), {0}, 1, 1), CapacityError);
  CHECK_THROWS_AS(flip_scatter_max(e5, e5.vertex_set(), 1, 3), CapacityError);
}

TEST_CASE("flip break oracle") {
  Graph two = edgeless_graph(2);
  CHECK(flip_break_max(two, two.vertex_set(), 3, 1) == 1);
  Graph e6 = edgeless_graph(6);
  CHECK(flip_break_max(e6, e6.vertex_set(), 0, 1) == 3);  // disjointness caps at half

  // frozen regression constant, computed by this oracle on the path P6
  Graph p6 = path_graph(6);
  CHECK(flip_break_max(p6, p6.vertex_set(), 2, 1) == 2);
}

TEST_CASE("scatter and break are monotone in r and k") {
  for (int t = 0; t < 10; ++t) {
    Rng rng(4400 + t);
    Graph g = random_graph(rng, rng.uniform(3, 6), rng.uniform(20, 80));
    VertexSet a = g.vertex_set();
    int prev_s = 1 << 20, prev_b = 1 << 20;
    for (int r = 1; r <= 3; ++r) {
      int s = flip_scatter_max(g, a, r, 1);
      int b = flip_break_max(g, a, r, 1);
      REQUIRE(s <= prev_s);
      REQUIRE(b <= prev_b);
      prev_s = s;
      prev_b = b;
    }
    REQUIRE(flip_scatter_max(g, a, 2, 2) >= flip_scatter_max(g, a, 2, 1));
    REQUIRE(flip_break_max(g, a, 2, 2) >= flip_break_max(g, a, 2, 1));
  }
}
