#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "vmlab/errors.hpp"

namespace vmlab {

// Vertex ids are external and stable: deletion never renumbers survivors.
using VertexId = int;
using VertexSet = std::set<VertexId>;

// Non-negative path length, or unreachable.
class Distance {
 public:
  Distance() : v_(kInf) {}
  static Distance finite(int d) {
    if (d < 0) throw DomainError("negative distance");
    Distance r;
    r.v_ = d;
    return r;
  }
  static Distance infinite() { return Distance(); }

  bool is_finite() const { return v_ != kInf; }
  int value() const {
    if (!is_finite()) throw DomainError("distance is infinite");
    return v_;
  }
  bool operator==(const Distance&) const = default;

  // Infinite sorts above every finite value.
  friend bool operator<(const Distance& a, const Distance& b) {
    if (a.v_ == kInf) return false;
    if (b.v_ == kInf) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Distance& a, const Distance& b) { return !(b < a); }
  friend bool operator>=(const Distance& a, const Distance& b) { return !(a < b); }

 private:
  static constexpr int kInf = -1;
  int v_;
};

// lhs >= ceil(rhs / 2) with unreachable handled exactly: if rhs is infinite
// the inequality demands lhs infinite too.
bool at_least_half(Distance lhs, Distance rhs);

class GraphBuilder;

// Immutable labeled simple graph over GF(2) adjacency. One dense bit row per
// vertex, indexed by an internal slot table; ids stay stable across every
// operation. All derived graphs are fresh values.
class Graph {
 public:
  Graph() = default;

  // Vertices 0..n-1.
  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);
  static Graph from_edges(std::vector<VertexId> ids,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);

  int order() const { return static_cast<int>(ids_.size()); }
  long edge_count() const;
  const std::vector<VertexId>& vertices() const { return ids_; }
  VertexSet vertex_set() const { return VertexSet(ids_.begin(), ids_.end()); }

  bool has_vertex(VertexId v) const { return find_slot(v) >= 0; }
  bool adjacent(VertexId u, VertexId v) const;
  int degree(VertexId v) const;
  VertexSet neighbors(VertexId v) const;

  // s together with every vertex adjacent to it.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& drop) const;

  Distance distance(VertexId u, VertexId v) const;
  // Indexed by position in vertices().
  std::vector<std::vector<Distance>> all_distances() const;

  bool operator==(const Graph& o) const { return ids_ == o.ids_ && rows_ == o.rows_; }

  // Slot-level access for algorithms that work on bit rows directly.
  int slot_of(VertexId v) const;  // DomainError if absent
  const std::vector<std::uint64_t>& row_bits(int slot) const { return rows_[slot]; }

 private:
  friend class GraphBuilder;

  int find_slot(VertexId v) const;  // -1 if absent
  bool bit(int su, int sv) const { return (rows_[su][sv >> 6] >> (sv & 63)) & 1; }

  std::vector<VertexId> ids_;  // ascending
  std::vector<std::vector<std::uint64_t>> rows_;
  int words_ = 0;
};

// Edit buffer for deriving one graph from another. Keeps adjacency symmetric
// and loop-free by construction; the GF(2) row operations live here.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(std::vector<VertexId> ids);
  explicit GraphBuilder(const Graph& g);

  void set_edge(VertexId u, VertexId v, bool present);
  void toggle_edge(VertexId u, VertexId v);

  // Toggle every pair of distinct vertices inside s.
  void complement_within(const VertexSet& s);
  // Toggle every pair (a, b) with a in s and b in t; s and t must be disjoint.
  void toggle_between(const VertexSet& s, const VertexSet& t);
  // Remove all edges inside s.
  void clear_within(const VertexSet& s);

  Graph build() const;

 private:
  std::vector<std::uint64_t> mask_of(const VertexSet& s) const;
  int slot_checked(VertexId v) const;

  Graph g_;
};

}  // namespace vmlab
