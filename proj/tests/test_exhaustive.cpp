#include <doctest.h>

#include "vmlab/commute.hpp"
#include "vmlab/search.hpp"
#include "vmlab/vminor.hpp"

#include "testutil.hpp"

// Exhaustive checks at order 4: every graph, every small flip, every
// independent set. Complements the randomized suites with certainty on the
// smallest instances, where corner cases hide.

using namespace vmlab;
using namespace vmlab::test;

namespace {

constexpr int kN = 4;

Graph graph_from_mask(unsigned mask) {
  GraphBuilder b(kN);
  int bit = 0;
  for (int u = 0; u < kN; ++u)
    for (int v = u + 1; v < kN; ++v, ++bit)
      if (mask & (1u << bit)) b.set_edge(u, v, true);
  return b.build();
}

constexpr unsigned kGraphCount = 1u << (kN * (kN - 1) / 2);

template <typename F>
void for_each_two_class_flip(F&& visit) {
  for (unsigned assign = 0; assign < (1u << kN); ++assign) {
    std::map<VertexId, int> iota;
    for (int v = 0; v < kN; ++v) iota[v] = ((assign >> v) & 1) + 1;
    for (unsigned bits = 0; bits < 8; ++bits) {
      std::vector<std::vector<std::uint8_t>> tau{
          {static_cast<std::uint8_t>(bits & 1), static_cast<std::uint8_t>((bits >> 1) & 1)},
          {static_cast<std::uint8_t>((bits >> 1) & 1),
           static_cast<std::uint8_t>((bits >> 2) & 1)}};
      visit(Flip(2, iota, std::move(tau)));
    }
  }
}

std::vector<VertexSet> all_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << kN); ++mask) {
    VertexSet s;
    for (int v = 0; v < kN; ++v)
      if (mask & (1u << v)) s.insert(v);
    if (g.is_independent(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("exhaustive: flip application matches the per-pair formula and involutes") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    for_each_two_class_flip([&](const Flip& f) {
      Graph got = apply_flip(g, f);
      for (int u = 0; u < kN; ++u)
        for (int v = u + 1; v < kN; ++v) {
          bool expect = g.adjacent(u, v) ^ f.tau(f.class_of(u), f.class_of(v));
          if (got.adjacent(u, v) != expect) {
            REQUIRE(got.adjacent(u, v) == expect);
          }
        }
      if (!(apply_flip(got, f) == g)) REQUIRE(apply_flip(got, f) == g);
    });
  }
}

TEST_CASE("exhaustive: local complementation matches the per-pair formula and involutes") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    for (int w = 0; w < kN; ++w) {
      Graph got = local_complement(g, w);
      for (int u = 0; u < kN; ++u)
        for (int v = u + 1; v < kN; ++v) {
          bool expect = g.adjacent(u, v) ^ (g.adjacent(u, w) && g.adjacent(w, v));
          if (got.adjacent(u, v) != expect) {
            REQUIRE(got.adjacent(u, v) == expect);
          }
        }
      if (!(local_complement(got, w) == g)) REQUIRE(local_complement(got, w) == g);
    }
  }
}

TEST_CASE("exhaustive: set complementation equals the summation route") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    for (const auto& iset : all_independent_sets(g)) {
      Graph got = local_complement_set(g, iset);
      if (!(got == lc_set_by_formula(g, iset))) {
        REQUIRE(got == lc_set_by_formula(g, iset));
      }
    }
  }
}

TEST_CASE("exhaustive: pivot formula on every edge of every graph") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    for (int u = 0; u < kN; ++u)
      for (int v = u + 1; v < kN; ++v) {
        if (!g.adjacent(u, v)) continue;
        Graph got = pivot(g, u, v);
        Graph other = local_complement(local_complement(local_complement(g, v), u), v);
        if (!(got == other)) REQUIRE(got == other);
        for (int x = 0; x < kN; ++x)
          for (int y = x + 1; y < kN; ++y) {
            if (x == u || x == v || y == u || y == v) continue;
            bool expect = g.adjacent(x, y) ^ (g.adjacent(x, u) && g.adjacent(y, v)) ^
                          (g.adjacent(x, v) && g.adjacent(y, u));
            if (got.adjacent(x, y) != expect) REQUIRE(got.adjacent(x, y) == expect);
          }
      }
  }
}

TEST_CASE("exhaustive: commutation of one-class flips over every independent set") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    std::map<VertexId, int> iota;
    for (int v = 0; v < kN; ++v) iota[v] = 1;
    for (int bit = 0; bit <= 1; ++bit) {
      Flip f(1, iota, {{static_cast<std::uint8_t>(bit)}});
      for (const auto& iset : all_independent_sets(g)) {
        CommuteResult res = commute_general(g, f, iset);
        REQUIRE(res.partition.size() <= 2);
        Graph rhs = apply_flip(g, f);
        for (const auto& part : res.partition) rhs = local_complement_set(rhs, part);
        Graph lhs = apply_flip(local_complement_set(g, iset), res.flip);
        if (!(lhs == rhs)) REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("exhaustive: depth-1 containment finds every constructed minor") {
  for (unsigned gm = 0; gm < kGraphCount; ++gm) {
    Graph g = graph_from_mask(gm);
    for (const auto& iset : all_independent_sets(g)) {
      Graph whole = local_complement_set(g, iset);
      for (VertexSet dels : {VertexSet{}, VertexSet{0}, VertexSet{1, 3}}) {
        Graph h = whole.without(dels);
        auto res = is_depth_r_vminor(g, h, 1);
        if (!res.found) REQUIRE(res.found);
      }
    }
  }
}
