#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vmlab/flip.hpp"
#include "vmlab/graph.hpp"

namespace vmlab {

// Depth-c vertex minor in normal form: complement the independent sets
// I_1, ..., I_c in order (each independent at its step, with all deletions
// postponed), then delete. Ids are preserved throughout.
struct VMinorWitness {
  std::vector<VertexSet> steps;
  VertexSet deletions;

  int depth() const { return static_cast<int>(steps.size()); }
  bool operator==(const VMinorWitness&) const = default;
};

// E'(x,y) = E(x,y) + E(x,v) * E(v,y): complement among the neighbors of v.
Graph local_complement(const Graph& g, VertexId v);

// g * u * v * u for an edge uv. PreconditionError if uv is not an edge.
Graph pivot(const Graph& g, VertexId u, VertexId v);

// Simultaneous complementation of an independent set; order-independent.
// FaultyComplementation if i is not independent (never silently computed).
Graph local_complement_set(const Graph& g, const VertexSet& i);

// Replays the witness: g * I_1 * ... * I_c - D. FaultyComplementation with
// the step index if some I_j is not independent at its step.
Graph apply_witness(const Graph& g, const VMinorWitness& w);

// Describes g as a subdivision of some graph H: one entry per H-edge (u < v)
// holding the whole path vertex sequence u, x_1, ..., x_k, v.
struct SubdivisionMap {
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> paths;
};

// Witness of depth ceil(log2(r+1)) (r = max subdivision count in the map)
// whose application to g yields H on H's original ids. Each round selects,
// per path, the internal vertices at odd positions, complements them, and
// marks them for deletion. ValidationError if the map does not describe g.
VMinorWitness unsubdivide(const Graph& g, const SubdivisionMap& m);

// For an independent set i holding exactly one vertex per f-class, a sequence
// z_1, ..., z_p (p <= floor(3k/2), each element used at most twice) with
// (g (+) f) * z_1 * ... * z_p - N_g[i]  =  g - N_g[i].
// Self-active classes cost one complementation, the rest are eliminated in
// pairs by a pivot; ties go to the smallest class index.
std::vector<VertexId> reduce_flip_by_pivots(const Graph& g, const Flip& f, const VertexSet& i);

// Serialization: "steps c", c lines "<cnt> <ids...>", "delete <cnt> <ids...>".
std::string witness_to_text(const VMinorWitness& w);
VMinorWitness witness_from_text(const std::string& text);

}  // namespace vmlab
