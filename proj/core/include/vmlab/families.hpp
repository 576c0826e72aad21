#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vmlab/graph.hpp"
#include "vmlab/rational.hpp"
#include "vmlab/vminor.hpp"

namespace vmlab {

// Generator output: the graph plus a role annotation per vertex (a1, b2,
// p(1,2,3), interval names, ...) so downstream operations can reference
// vertices by role.
struct LabeledGraph {
  Graph graph;
  std::map<VertexId, std::string> roles;

  VertexId by_role(const std::string& role) const;
};

// Vertices a_1..a_n, b_1..b_n; edge a_i b_j iff i <= j.
LabeledGraph half_graph(int n);

// Vertices [n] (ids 1..n); edge ij iff (i,j) is an inversion of sigma.
// sigma is 1-based: sigma[0] = sigma(1).
LabeledGraph permutation_graph(const std::vector<int>& sigma);

// Vertices a_{i,j}; adjacent iff same row, same column, or
// (i<j) <-> (i'<j').
LabeledGraph comparability_grid(int n);

enum class CrossingKind { Star, Clique, Half };

// The r-subdivision of K_{n,n} (vertices p_{i,j,k}, 0 <= k <= r+1, with
// p_{i,j,0} = a_i and p_{i,j,r+1} = b_j shared), plus kind-specific edges;
// when flip_tau is given, the (r+2)-class flip over the layers is applied.
LabeledGraph crossing(CrossingKind kind, int r, int n,
                      const std::optional<std::vector<std::vector<std::uint8_t>>>& flip_tau =
                          std::nullopt);

// Perfect matching of [n] x [n]; first coordinate is the a-side index.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

// Vertices {a_i} u {b_j} u M; (k,l) ~ a_i iff i <= k and (k,l) ~ b_j iff
// j <= l; no other edges.
LabeledGraph ordered_matching_graph(const Matching& m);

// The power-graph encoding: stable points a_1, a_1', ..., a_n, a_n', then
// b_J for all J subseteq [n] in reverse lexicographic order (b over the full
// set first, b over the empty set last); one clique interval from a_1 to
// a_n', and one from a_i to b_J for every i in J. Roles: "a1", "a1'",
// "b{1,2}", "b{}", "I(a1,an')", "I(a2,b{1,2})".
LabeledGraph power_split_interval(int n);

// Each edge of h replaced by a path with exactly r internal vertices; fresh
// ids start above h's largest id. The map feeds unsubdivide.
std::pair<Graph, SubdivisionMap> subdivision(const Graph& h, int r);

// Split interval representation: singleton stable points plus pairwise
// intersecting clique intervals, all at exact rational positions.
struct IntervalModel {
  struct Point {
    VertexId id;
    Rational pos;
  };
  struct Interval {
    VertexId id;
    Rational lo, hi;
  };
  std::vector<Point> points;
  std::vector<Interval> intervals;
};

// Intersection graph of the model (points are singletons).
Graph interval_model_graph(const IntervalModel& model);

// Certified reduction of a split interval graph to an ordered matching
// graph: the model is augmented (fresh points and intervals only) until
// every stable point is the extreme incidence of exactly one interval and
// all intervals share the distinguished point a_1; the resulting matching m
// and an embedding certify that the input graph is an induced subgraph of
// ordered_matching_graph(m) * a_1.
struct OrderedMatchingEmbedding {
  Matching m;
  LabeledGraph om;                         // ordered_matching_graph(m)
  VertexId a1;                             // vertex of om to complement
  std::map<VertexId, VertexId> embedding;  // model vertex -> om vertex
};

OrderedMatchingEmbedding split_interval_to_ordered_matching(const IntervalModel& model);

}  // namespace vmlab
