#pragma once

#include <map>
#include <optional>
#include <string>

#include "vmlab/canonical.hpp"
#include "vmlab/graph.hpp"
#include "vmlab/vminor.hpp"

namespace vmlab {

struct SearchCaps {
  int max_order = 10;
  int max_depth = 3;
  int canonical_cap = kDefaultCanonicalCap;
};

struct ContainmentResult {
  bool found = false;
  std::optional<VMinorWitness> witness;
  // pattern vertex -> vertex of the replayed result
  std::optional<std::map<VertexId, VertexId>> embedding;
  struct Stats {
    long nodes_explored = 0;
    long dedup_hits = 0;
  } stats;
};

// Decides h in svm_r(g) up to isomorphism by level-by-level breadth-first
// exploration over independent-set complementations. Deletions are deferred
// to a final induced-subgraph test (the normal form makes interleaving
// unnecessary); the frontier is deduplicated by canonical form. Independent
// sets are enumerated by increasing size then lexicographic id order, so the
// first witness found is deterministic. CapacityError above the caps.
ContainmentResult is_depth_r_vminor(const Graph& g, const Graph& h, int r,
                                    const SearchCaps& caps = {});

struct FlipSearchCaps {
  int max_order = 8;
  int max_k = 2;
};

// Maximum m such that some k-flip f and an m-subset of a are pairwise at
// distance >= r in g (+) f. Exhaustive over all class assignments and tau
// tables; per flip, a maximum independent set of the too-close graph.
int flip_scatter_max(const Graph& g, const VertexSet& a, int r, int k,
                     const FlipSearchCaps& caps = {});

// Maximum m such that some k-flip f admits A1, A2 inside a with
// |A1| = |A2| = m and every cross distance > r in g (+) f.
int flip_break_max(const Graph& g, const VertexSet& a, int r, int k,
                   const FlipSearchCaps& caps = {});

}  // namespace vmlab
