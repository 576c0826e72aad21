#include <doctest.h>

#include "vmlab/structures.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

#include "testutil.hpp"

using namespace vmlab;
using namespace vmlab::test;

namespace {

BinaryStructure random_structure(Rng& rng, int max_n, int max_k, bool force_symmetric) {
  int n = rng.uniform(1, max_n);
  std::vector<int> dom;
  int base = rng.uniform(0, 3);
  for (int i = 0; i < n; ++i) dom.push_back(base + i);
  int k = rng.uniform(1, max_k);
  std::vector<BinaryStructure::RelationSpec> rels;
  for (int i = 1; i <= k; ++i) {
    BinaryStructure::RelationSpec r{"R" + std::to_string(i),
                                    force_symmetric || rng.coin(), {}};
    for (int u : dom)
      for (int v : dom) {
        if (u == v) continue;
        if (r.symmetric && v < u) continue;
        if (rng.percent(25)) r.pairs.emplace_back(u, v);
      }
    rels.push_back(std::move(r));
  }
  std::vector<BinaryStructure::PredicateSpec> preds;
  int q = rng.uniform(0, 2);
  for (int i = 1; i <= q; ++i) {
    BinaryStructure::PredicateSpec p{"P" + std::to_string(i), {}};
    for (int v : dom)
      if (rng.coin()) p.members.insert(v);
    preds.push_back(std::move(p));
  }
  return BinaryStructure(dom, rels, preds);
}

}  // namespace

TEST_CASE("structure local complementation degenerates to the graph case") {
  Graph k3 = complete_graph(3);
  BinaryStructure m = structure_from_graph(k3);
  BinaryStructure lc = lc_structure(m, 0, 0);
  CHECK(graph_from_structure(lc) == local_complement(k3, 0));

  // a second relation is left bitwise unchanged
  BinaryStructure::RelationSpec e{"E", true, {{0, 1}, {1, 2}, {0, 2}}};
  BinaryStructure::RelationSpec lt{"lt", false, {{0, 1}, {1, 2}, {0, 2}}};
  BinaryStructure two({0, 1, 2}, {e, lt}, {});
  BinaryStructure lc2 = lc_structure(two, 0, 0);
  for (int u : two.domain())
    for (int v : two.domain())
      if (u != v) CHECK(lc2.rel("lt", u, v) == two.rel("lt", u, v));
  CHECK(!lc2.rel("E", 1, 2));

  // ordered graph: complementing on E preserves the order exactly
  CHECK_THROWS_AS(lc_structure(two, 1, 0), PreconditionError);
}

TEST_CASE("structure local complementation is an involution") {
  for (int t = 0; t < 100; ++t) {
    Rng rng(3600 + t);
    BinaryStructure m = random_structure(rng, 7, 2, true);
    int idx = rng.uniform(0, m.relation_count() - 1);
    int v = rng.pick(m.domain());
    CHECK(lc_structure(lc_structure(m, idx, v), idx, v) == m);
  }
}

TEST_CASE("depth-1 structure minors agree with sequential complementation") {
  // all sets empty: identity
  Rng rng(3700);
  BinaryStructure m = random_structure(rng, 6, 2, true);
  CHECK(depth1_vm_structure(m, {}, {}) == m);

  // one relation: agrees with the graph witness machinery
  Graph g = random_graph(rng, 7, 40);
  BinaryStructure mg = structure_from_graph(g);
  VertexSet iset = random_independent_set(rng, g);
  VertexSet dels;
  for (VertexId v : g.vertices())
    if (rng.percent(25)) dels.insert(v);
  VMinorWitness w{{iset}, dels};
  CHECK(graph_from_structure(depth1_vm_structure(mg, {{0, iset}}, dels)) ==
        apply_witness(g, w));

  // two symmetric relations: agrees with manual sequential complementation
  for (int t = 0; t < 50; ++t) {
    Rng trng(3800 + t);
    BinaryStructure s = random_structure(trng, 7, 2, true);
    std::map<int, VertexSet> sets;
    BinaryStructure manual = s;
    for (int idx = 0; idx < s.relation_count(); ++idx) {
      VertexSet is;
      for (int v : s.domain())
        if (trng.percent(30)) {
          bool ok = true;
          for (int u : is)
            if (s.rel(idx, u, v) || s.rel(idx, v, u)) ok = false;
          if (ok) is.insert(v);
        }
      if (is.empty()) continue;
      sets[idx] = is;
      for (int v : is) manual = lc_structure(manual, idx, v);
    }
    VertexSet dl;
    for (int v : s.domain())
      if (trng.percent(20)) dl.insert(v);
    BinaryStructure got = depth1_vm_structure(s, sets, dl);
    // manual sequential complementation then deletion must agree
    BinaryStructure manual_res = depth1_vm_structure(manual, {}, dl);
    REQUIRE(got == manual_res);
  }

  // independence violations carry the relation index
  BinaryStructure::RelationSpec e{"E", true, {{0, 1}}};
  BinaryStructure bad({0, 1}, {e}, {});
  try {
    depth1_vm_structure(bad, {{0, {0, 1}}}, {});
    FAIL("expected FaultyComplementation");
  } catch (const FaultyComplementation& ex) {
    CHECK(ex.step == 0);
  }
}

TEST_CASE("transduction X encodes and K decodes exactly") {
  // k = 1 keeps the structure itself (modulo the copy mark)
  Graph g = complete_graph(3);
  BinaryStructure m = structure_from_graph(g);
  BinaryStructure enc = transduction_X(m);
  CHECK(enc.size() == 3);
  CHECK(interpretation_K(enc) == m);

  // k = 2 with empty relations: the edge relation is a perfect matching of
  // clone pairs
  BinaryStructure two({0, 1, 2}, {{"R1", true, {}}, {"R2", true, {}}}, {});
  BinaryStructure enc2 = transduction_X(two);
  CHECK(enc2.size() == 6);
  long edges = 0;
  for (int u : enc2.domain())
    for (int v : enc2.domain())
      if (u < v && enc2.rel("E", u, v)) ++edges;
  CHECK(edges == 3);
  CHECK(interpretation_K(enc2) == two);

  // empty R2 is reconstructed empty; an ordered graph round-trips
  BinaryStructure::RelationSpec e{"E", true, {{0, 1}}};
  BinaryStructure::RelationSpec lt{"lt", false, {{0, 1}, {0, 2}, {1, 2}}};
  BinaryStructure og({0, 1, 2}, {e, lt}, {});
  CHECK(interpretation_K(transduction_X(og)) == og);

  for (int t = 0; t < 300; ++t) {
    Rng rng(3900 + t);
    BinaryStructure s = random_structure(rng, 8, 3, false);
    REQUIRE(interpretation_K(transduction_X(s)) == s);
  }
}

TEST_CASE("structure text format round-trips") {
  for (int t = 0; t < 60; ++t) {
    Rng rng(4000 + t);
    BinaryStructure s = random_structure(rng, 8, 3, false);
    REQUIRE(structure_from_text(structure_to_text(s)) == s);
  }
}

TEST_CASE("loops cannot enter the graph encoding") {
  BinaryStructure::RelationSpec bad{"R1", false, {{0, 0}}};
  BinaryStructure m({0, 1}, {bad}, {});
  CHECK_THROWS_AS(transduction_X(m), DomainError);
}
