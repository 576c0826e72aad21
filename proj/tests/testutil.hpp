#pragma once

// Shared helpers for the test suites: tiny named graphs, reference (oracle)
// implementations kept independent of the library code paths they check, and
// a reference FO evaluator without memoization.

#include <map>
#include <vector>

#include "vmlab/formula.hpp"
#include "vmlab/graph.hpp"
#include "vmlab/rng.hpp"
#include "vmlab/structures.hpp"

namespace vmlab::test {

inline Graph path_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph edgeless_graph(int n) { return Graph::from_edges(n, {}); }

inline Graph star_graph(int leaves) {  // center 0
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// Relabeled copy of g under the permutation slot -> perm[slot] applied to
// the id sequence.
inline Graph permuted_graph(const Graph& g, const std::vector<int>& perm) {
  const auto& ids = g.vertices();
  std::vector<std::pair<VertexId, VertexId>> e;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) e.emplace_back(ids[perm[i]], ids[perm[j]]);
  return Graph::from_edges(ids, e);
}

// Reference route for set complementation, straight from the summation
// formula E'(x,y) = E(x,y) + sum over v in i of E(x,v) * E(v,y); independent
// of the sequential implementation it checks.
inline Graph lc_set_by_formula(const Graph& g, const VertexSet& iset) {
  const auto& ids = g.vertices();
  std::vector<std::pair<VertexId, VertexId>> e;
  for (size_t x = 0; x < ids.size(); ++x)
    for (size_t y = x + 1; y < ids.size(); ++y) {
      bool val = g.adjacent(ids[x], ids[y]);
      for (VertexId v : iset)
        if (v != ids[x] && v != ids[y])
          val ^= g.adjacent(ids[x], v) && g.adjacent(v, ids[y]);
      if (val) e.emplace_back(ids[x], ids[y]);
    }
  return Graph::from_edges(ids, e);
}

// Plain recursive FO evaluator, no memoization, no caps.
inline bool reference_evaluate(const BinaryStructure& s, const FormulaPtr& f,
                               std::map<std::string, int> a) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return a.at(f->var1) == a.at(f->var2);
    case Formula::Kind::Rel:
      return s.rel(f->symbol, a.at(f->var1), a.at(f->var2));
    case Formula::Kind::Pred:
      return s.pred(f->symbol, a.at(f->var1));
    case Formula::Kind::Not:
      return !reference_evaluate(s, f->lhs, a);
    case Formula::Kind::And:
      return reference_evaluate(s, f->lhs, a) && reference_evaluate(s, f->rhs, a);
    case Formula::Kind::Or:
      return reference_evaluate(s, f->lhs, a) || reference_evaluate(s, f->rhs, a);
    case Formula::Kind::Implies:
      return !reference_evaluate(s, f->lhs, a) || reference_evaluate(s, f->rhs, a);
    case Formula::Kind::Iff:
      return reference_evaluate(s, f->lhs, a) == reference_evaluate(s, f->rhs, a);
    case Formula::Kind::Exists:
      for (int e : s.domain()) {
        a[f->symbol] = e;
        if (reference_evaluate(s, f->lhs, a)) return true;
      }
      return false;
    case Formula::Kind::Forall:
      for (int e : s.domain()) {
        a[f->symbol] = e;
        if (!reference_evaluate(s, f->lhs, a)) return false;
      }
      return true;
  }
  return false;
}

// Random well-scoped formula over the signature {E} with optional unary P;
// in-scope variables grow under quantifiers.
inline FormulaPtr random_formula(Rng& rng, int depth, std::vector<std::string> scope,
                                 bool with_pred) {
  auto var = [&]() { return scope[rng.uniform(0, static_cast<int>(scope.size()) - 1)]; };
  if (depth == 0 || rng.percent(25)) {
    int pick = rng.uniform(0, with_pred ? 2 : 1);
    if (pick == 0) return Formula::rel("E", var(), var());
    if (pick == 1) return Formula::eq(var(), var());
    return Formula::pred("P", var());
  }
  switch (rng.uniform(0, 6)) {
    case 0:
      return Formula::negation(random_formula(rng, depth - 1, scope, with_pred));
    case 1:
      return Formula::conj(random_formula(rng, depth - 1, scope, with_pred),
                           random_formula(rng, depth - 1, scope, with_pred));
    case 2:
      return Formula::disj(random_formula(rng, depth - 1, scope, with_pred),
                           random_formula(rng, depth - 1, scope, with_pred));
    case 3:
      return Formula::implies(random_formula(rng, depth - 1, scope, with_pred),
                              random_formula(rng, depth - 1, scope, with_pred));
    case 4:
      return Formula::iff(random_formula(rng, depth - 1, scope, with_pred),
                          random_formula(rng, depth - 1, scope, with_pred));
    default: {
      std::string v = "q" + std::to_string(scope.size());
      scope.push_back(v);
      FormulaPtr body = random_formula(rng, depth - 1, scope, with_pred);
      return rng.coin() ? Formula::exists(v, std::move(body))
                        : Formula::forall(v, std::move(body));
    }
  }
}

inline std::string source_dir() {
#ifdef VMLAB_SOURCE_DIR
  return VMLAB_SOURCE_DIR;
#else
  return ".";
#endif
}

}  // namespace vmlab::test
