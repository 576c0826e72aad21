#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vmlab/graph.hpp"

namespace vmlab {

// A k-flip: a class assignment iota into [k] plus a symmetric k x k GF(2)
// table tau. Applying it XORs tau(iota(u), iota(v)) onto every pair of
// distinct vertices. Class indices are 1-based; empty classes are legal and
// are kept (never compacted) so class-count bounds stay checkable.
class Flip {
 public:
  // tau given as full k x k table; must be symmetric, entries 0/1.
  Flip(int k, std::map<VertexId, int> iota, std::vector<std::vector<std::uint8_t>> tau);

  // All-zero tau over the given assignment.
  static Flip identity(int k, std::map<VertexId, int> iota);

  int class_count() const { return k_; }
  const std::map<VertexId, int>& iota() const { return iota_; }
  int class_of(VertexId v) const;  // DomainError if v outside the domain
  bool in_domain(VertexId v) const { return iota_.count(v) != 0; }
  bool tau(int i, int j) const;  // 1-based
  bool tau_all_zero() const;

  bool operator==(const Flip&) const = default;

 private:
  int k_;
  std::map<VertexId, int> iota_;
  std::vector<std::vector<std::uint8_t>> tau_;
};

// E'(u,v) = E(u,v) + tau(iota(u), iota(v)) on distinct pairs; never touches
// the diagonal. Every vertex of g must be in iota's domain (a flip on a
// larger set restricts implicitly).
Graph apply_flip(const Graph& g, const Flip& f);

// Nonempty traces iota^-1(i) on x, in ascending class-index order.
std::vector<VertexSet> flip_classes_of(const Flip& f, const VertexSet& x);

// Whether adjacency between distinct members of x is a symmetric function of
// their class pair.
bool is_homogeneous(const Graph& g, const Flip& f, const VertexSet& x);

// Whether the two flips leave identical families of nonempty traces on x.
// Index-free: trace families are compared as sets of vertex sets.
bool is_compatible_on(const Flip& f1, const Flip& f2, const VertexSet& x);

// For an independent set i of g, a 2k-flip f' such that g (+) f' equals
// g (+) f with every edge inside i removed. Class (c, tagged) maps to
// c + k*tag, tag = 1 exactly on i.
Flip clean_flip(const Graph& g, const Flip& f, const VertexSet& i);

// Serialization: "k t" header, t lines "id class", then k upper-triangle
// rows of bits (row i holds tau(i,i) .. tau(i,k)).
std::string flip_to_text(const Flip& f);
Flip flip_from_text(const std::string& text);

}  // namespace vmlab
