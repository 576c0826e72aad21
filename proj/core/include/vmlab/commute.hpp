#pragma once

#include <string>
#include <vector>

#include "vmlab/flip.hpp"
#include "vmlab/graph.hpp"

namespace vmlab {

// Result of rewriting "flip then complement" as "complement then flip" (or
// back): a partition of the complemented set plus the replacement flip.
// actual_class_count records the inhabited class count of the flip; the
// closed-form worst case has no usable formula, so only the observed value
// is kept.
struct CommuteResult {
  std::vector<VertexSet> partition;
  Flip flip;
  int actual_class_count;
};

// For i independent in both g and g (+) f, builds f' with
//   g * i (+) f'  =  (g (+) f) * i     (exact graph equality).
// Classes of f' are pairs (class, sigma-vector); only inhabited labels are
// materialized, and their number is at most k * 2^k.
Flip commute0(const Graph& g, const Flip& f, const VertexSet& i);

// Variant used by the recursion: j is a nonempty part of one f-class of the
// f-homogeneous set i, independent in both g and g (+) f. Returns
// commute0(g, f, j) after verifying, on every invocation, that the result is
// i-compatible with f and that i \ j stays homogeneous in g * j.
Flip commute0b(const Graph& g, const Flip& f, const VertexSet& i, const VertexSet& j);

// For i independent in g, a partition J_1, ..., J_p of i with p <= 2k and a
// flip f' such that
//   g * i (+) f'  =  (g (+) f) * J_1 * ... * J_p   (left to right).
// Classes of i are processed in ascending index; a class that is a clique on
// the flipped side is split off its minimum-id element first.
CommuteResult commute_general(const Graph& g, const Flip& f, const VertexSet& i);

// For i independent in g (+) f: partition and f' with
//   g * I_1 * ... * I_p (+) f'  =  (g (+) f) * i.
CommuteResult commute_corollary_fwd(const Graph& g, const Flip& f, const VertexSet& i);

// For i independent in g: partition and f' with
//   (g (+) f') * I_p * ... * I_1  =  (g * i) (+) f.   Note the reversed order.
CommuteResult commute_corollary_bwd(const Graph& g, const Flip& f, const VertexSet& i);

// For i independent in g, a flip f' with at most 2k * 2^(2k) classes such
// that distances in g * i (+) f' are at least half of those in g (+) f,
// pair by pair. Composition of clean_flip and commute0.
Flip spread_flip(const Graph& g, const Flip& f, const VertexSet& i);

std::string commute_result_to_text(const CommuteResult& r);

}  // namespace vmlab
