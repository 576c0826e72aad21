#include <doctest.h>

#include <algorithm>

#include "vmlab/canonical.hpp"
#include "vmlab/families.hpp"
#include "vmlab/graph_io.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

#include "testutil.hpp"

using namespace vmlab;
using namespace vmlab::test;

TEST_CASE("local complementation on the toy graphs") {
  Graph k3 = complete_graph(3);
  Graph lc = local_complement(k3, 0);
  CHECK(lc.adjacent(0, 1));
  CHECK(lc.adjacent(0, 2));
  CHECK(!lc.adjacent(1, 2));  // edge opposite v removed

  Graph p3 = path_graph(3);  // 0 - 1 - 2
  CHECK(local_complement(p3, 1) == complete_graph(3));

  Graph star = star_graph(3);
  CHECK(local_complement(star, 0) == complete_graph(4));

  CHECK_THROWS_AS(local_complement(p3, 9), DomainError);
}

TEST_CASE("local complement involution") {
  for (int t = 0; t < 200; ++t) {
    Rng rng(900 + t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.uniform(10, 90));
    VertexId v = rng.pick(g.vertices());
    CHECK(local_complement(local_complement(g, v), v) == g);
  }
}

TEST_CASE("pivot equals both triple forms and the displayed formula") {
  Graph k2 = complete_graph(2);
  CHECK(pivot(k2, 0, 1) == k2);
  CHECK_THROWS_AS(pivot(edgeless_graph(2), 0, 1), PreconditionError);

  for (int t = 0; t < 500; ++t) {
    Rng rng(1100 + t);
    Graph g = random_graph(rng, rng.uniform(2, 10), rng.uniform(40, 90));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : g.vertices())
      for (VertexId v : g.vertices())
        if (u < v && g.adjacent(u, v)) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    auto [u, v] = edges[rng.uniform(0, static_cast<int>(edges.size()) - 1)];
    Graph uvu = local_complement(local_complement(local_complement(g, u), v), u);
    Graph vuv = local_complement(local_complement(local_complement(g, v), u), v);
    REQUIRE(uvu == vuv);
    REQUIRE(pivot(g, u, v) == uvu);
    for (VertexId x : g.vertices())
      for (VertexId y : g.vertices()) {
        if (x >= y || x == u || x == v || y == u || y == v) continue;
        bool expect = g.adjacent(x, y) ^ (g.adjacent(x, u) && g.adjacent(y, v)) ^
                      (g.adjacent(x, v) && g.adjacent(y, u));
        REQUIRE(uvu.adjacent(x, y) == expect);
      }
  }
}

TEST_CASE("set complementation follows the summation formula") {
  Graph c4 = cycle_graph(4);
  // complementing one diagonal pair toggles the other diagonal twice
  CHECK(local_complement_set(c4, {0, 2}) == c4);

  Rng rng(1300);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(rng, rng.uniform(1, 10), rng.uniform(10, 90));
    VertexSet iset = random_independent_set(rng, g);
    CHECK(local_complement_set(g, iset) == lc_set_by_formula(g, iset));
  }
  CHECK(local_complement_set(c4, {}) == c4);
}

TEST_CASE("set complementation is order independent, exhaustively for small sets") {
  for (int t = 0; t < 200; ++t) {
    Rng rng(1400 + t);
    Graph g = random_graph(rng, rng.uniform(2, 10), rng.uniform(10, 90));
    VertexSet iset = random_independent_set(rng, g);
    while (iset.size() > 4) iset.erase(std::prev(iset.end()));
    Graph ref = local_complement_set(g, iset);
    std::vector<VertexId> order(iset.begin(), iset.end());
    do {
      Graph cur = g;
      for (VertexId v : order) cur = local_complement(cur, v);
      REQUIRE(cur == ref);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("faulty complementation is a hard error") {
  Graph k2 = complete_graph(2);
  CHECK_THROWS_AS(local_complement_set(k2, {0, 1}), FaultyComplementation);
  VMinorWitness w;
  w.steps = {{0}, {0, 1}};  // second step is faulty in K2 * 0 = K2
  try {
    apply_witness(k2, w);
    FAIL("expected FaultyComplementation");
  } catch (const FaultyComplementation& e) {
    CHECK(e.step == 1);
  }
}

TEST_CASE("witness replay and deletion commutation") {
  Graph k3 = complete_graph(3);
  VMinorWitness w;
  CHECK(apply_witness(k3, w) == k3);
  w.steps = {{0}};
  CHECK(apply_witness(k3, w) == local_complement(k3, 0));

  // alternating vertices of C6 yield C3
  Graph c6 = cycle_graph(6);
  VMinorWitness alt;
  alt.steps = {{1, 3, 5}};
  alt.deletions = {1, 3, 5};
  Graph got = apply_witness(c6, alt);
  CHECK(got == Graph::from_edges(std::vector<VertexId>{0, 2, 4}, {{0, 2}, {2, 4}, {0, 4}}));

  // (g - u) * v = (g * v) - u for u != v
  for (int t = 0; t < 100; ++t) {
    Rng rng(1500 + t);
    Graph g = random_graph(rng, rng.uniform(2, 10), rng.uniform(10, 90));
    VertexId u = rng.pick(g.vertices());
    VertexId v = rng.pick(g.vertices());
    if (u == v) continue;
    CHECK(local_complement(g.without({u}), v) == local_complement(g, v).without({u}));
  }
}

TEST_CASE("depth-1 witnesses halve distances at worst") {
  for (int t = 0; t < 150; ++t) {
    Rng rng(1600 + t);
    Graph g = random_graph(rng, rng.uniform(2, 10), rng.uniform(10, 60));
    VMinorWitness w;
    w.steps = {random_independent_set(rng, g)};
    for (VertexId v : g.vertices())
      if (rng.percent(20)) w.deletions.insert(v);
    Graph h = apply_witness(g, w);
    for (VertexId x : h.vertices())
      for (VertexId y : h.vertices()) {
        if (x >= y) continue;
        REQUIRE(at_least_half(h.distance(x, y), g.distance(x, y)));
      }
  }
}

TEST_CASE("unsubdivide on the toy cases") {
  Graph k3 = complete_graph(3);
  auto [g0, m0] = subdivision(k3, 0);
  CHECK(g0 == k3);
  VMinorWitness w0 = unsubdivide(g0, m0);
  CHECK(w0.depth() == 0);
  CHECK(apply_witness(g0, w0) == k3);

  auto [g1, m1] = subdivision(k3, 1);
  CHECK(g1.order() == 6);
  VMinorWitness w1 = unsubdivide(g1, m1);
  CHECK(w1.depth() == 1);
  CHECK(apply_witness(g1, w1) == k3);

  Graph k4 = complete_graph(4);
  auto [g3, m3] = subdivision(k4, 3);
  CHECK(g3.order() == 4 + 3 * 6);
  VMinorWitness w3 = unsubdivide(g3, m3);
  CHECK(w3.depth() == 2);  // ceil(log2(4))
  CHECK(apply_witness(g3, w3) == k4);
}

TEST_CASE("unsubdivide depth matches ceil(log2(r+1)) and replays exactly") {
  for (int t = 0; t < 30; ++t) {
    Rng rng(1700 + t);
    Graph h = random_graph(rng, rng.uniform(2, 6), rng.uniform(30, 90));
    for (int r = 0; r <= 7; ++r) {
      auto [g, map] = subdivision(h, r);
      VMinorWitness w = unsubdivide(g, map);
      int reff = h.edge_count() > 0 ? r : 0;
      int expected = 0;
      while ((1 << expected) < reff + 1) ++expected;
      REQUIRE(w.depth() == expected);
      REQUIRE(apply_witness(g, w) == h);
    }
  }
}

TEST_CASE("unsubdivide validates its map") {
  Graph c6 = cycle_graph(6);
  SubdivisionMap bad;
  bad.paths[{0, 2}] = {0, 1, 2};  // misses the rest of the cycle
  CHECK_THROWS_AS(unsubdivide(c6, bad), ValidationError);
}

TEST_CASE("pivot elimination of a flip outside the closed neighborhood") {
  // tau = 0: nothing to do
  Graph g = edgeless_graph(4);
  std::map<VertexId, int> iota{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  CHECK(reduce_flip_by_pivots(g, Flip::identity(1, iota), {0}).empty());

  // one self-active class
  Rng rng(1800);
  for (int t = 0; t < 40; ++t) {
    Graph h = random_graph(rng, 6, 40);
    std::map<VertexId, int> io;
    for (VertexId v : h.vertices()) io[v] = 1;
    Flip f(1, io, {{1}});
    VertexId z = rng.pick(h.vertices());
    auto seq = reduce_flip_by_pivots(h, f, {z});
    REQUIRE(seq == std::vector<VertexId>{z});
    Graph cur = local_complement(apply_flip(h, f), z);
    VertexSet nbh = h.closed_neighborhood({z});
    REQUIRE(cur.without(nbh) == h.without(nbh));
  }

  // one cross-active pair of classes: a single pivot
  Graph k2free = edgeless_graph(5);
  std::map<VertexId, int> io2{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 1}};
  Flip f2(2, io2, {{0, 1}, {1, 0}});
  auto seq = reduce_flip_by_pivots(k2free, f2, {0, 1});
  CHECK(seq == std::vector<VertexId>{0, 1, 0});

  CHECK_THROWS_AS(reduce_flip_by_pivots(k2free, f2, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(reduce_flip_by_pivots(k2free, f2, {0}), PreconditionError);
}

TEST_CASE("witness serialization replays bit-exactly") {
  for (int t = 0; t < 40; ++t) {
    Rng rng(1900 + t);
    Graph g = random_graph(rng, rng.uniform(2, 9), rng.uniform(10, 80));
    VMinorWitness w;
    Graph cur = g;
    int depth = rng.uniform(0, 2);
    for (int d = 0; d < depth; ++d) {
      VertexSet iset = random_independent_set(rng, cur);
      w.steps.push_back(iset);
      cur = local_complement_set(cur, iset);
    }
    for (VertexId v : g.vertices())
      if (rng.percent(25)) w.deletions.insert(v);
    VMinorWitness back = witness_from_text(witness_to_text(w));
    REQUIRE(back == w);
    REQUIRE(apply_witness(g, back) == apply_witness(g, w));
  }
}
