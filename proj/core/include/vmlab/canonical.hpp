#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vmlab/graph.hpp"

namespace vmlab {

// Certificate that is equal for two graphs iff they are isomorphic
// (for orders within the configured cap).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kDefaultCanonicalCap = 10;

// Exact canonical form by refinement-pruned permutation search: vertices are
// first partitioned by iterated neighborhood-color refinement, then the
// lexicographically least adjacency bit string over all class-respecting
// orders is taken. CapacityError above the cap; certificates are exact, never
// approximate.
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

// Injective map from pattern vertices to host vertices realizing pattern as
// an induced subgraph, or nullopt.
std::optional<std::map<VertexId, VertexId>> find_induced_embedding(const Graph& pattern,
                                                                   const Graph& host);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace vmlab
