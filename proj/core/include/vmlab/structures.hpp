#pragma once

#include <map>
#include <string>
#include <vector>

#include "vmlab/graph.hpp"

namespace vmlab {

// Finite domain with several binary relations (each flagged symmetric and
// irreflexive, or arbitrary) and unary predicates. Element ids are stable,
// like vertex ids.
class BinaryStructure {
 public:
  struct RelationSpec {
    std::string name;
    bool symmetric;  // symmetric-irreflexive when true
    std::vector<std::pair<int, int>> pairs;
  };
  struct PredicateSpec {
    std::string name;
    VertexSet members;
  };

  BinaryStructure() = default;
  BinaryStructure(std::vector<int> domain, std::vector<RelationSpec> relations,
                  std::vector<PredicateSpec> predicates);

  const std::vector<int>& domain() const { return domain_; }
  int size() const { return static_cast<int>(domain_.size()); }
  bool has_element(int v) const;

  int relation_count() const { return static_cast<int>(rel_names_.size()); }
  const std::string& relation_name(int idx) const { return rel_names_[idx]; }
  int relation_index(const std::string& name) const;  // -1 if absent
  bool relation_symmetric(int idx) const { return rel_sym_[idx]; }
  bool rel(int idx, int u, int v) const;
  bool rel(const std::string& name, int u, int v) const;

  int predicate_count() const { return static_cast<int>(pred_names_.size()); }
  const std::string& predicate_name(int idx) const { return pred_names_[idx]; }
  bool has_predicate(const std::string& name) const;
  bool pred(const std::string& name, int v) const;
  const VertexSet& predicate_members(const std::string& name) const;

  bool has_relation(const std::string& name) const { return relation_index(name) >= 0; }

  // i is independent for relation idx: no related pair inside it.
  bool independent_in(int idx, const VertexSet& s) const;

  bool operator==(const BinaryStructure& o) const;

 private:
  friend BinaryStructure lc_structure(const BinaryStructure&, int, int);
  friend BinaryStructure depth1_vm_structure(const BinaryStructure&,
                                             const std::map<int, VertexSet>&, const VertexSet&);

  int slot(int v) const;  // DomainError if absent

  std::vector<int> domain_;  // ascending
  std::vector<std::string> rel_names_;
  std::vector<bool> rel_sym_;
  std::vector<std::vector<std::uint8_t>> rel_bits_;  // [idx][su * n + sv]
  std::vector<std::string> pred_names_;
  std::vector<VertexSet> pred_members_;
};

// Single symmetric relation named rel_name; no predicates.
BinaryStructure structure_from_graph(const Graph& g, const std::string& rel_name = "E");
// Graph with the same ids from a structure's named symmetric relation,
// carrying no predicates.
Graph graph_from_structure(const BinaryStructure& m, const std::string& rel_name = "E");

// Complement relation idx on pairs of distinct idx-neighbors of v; the
// relation must be symmetric-flagged. Everything else is untouched.
BinaryStructure lc_structure(const BinaryStructure& m, int rel_idx, int v);

// M *^{R_1} I_1 * ... *^{R_a} I_a - D, relations in ascending index order;
// every I must be independent for its relation at its application point.
// FaultyComplementation (with the relation index) otherwise.
BinaryStructure depth1_vm_structure(const BinaryStructure& m,
                                    const std::map<int, VertexSet>& sets,
                                    const VertexSet& deletions);

// Encodes a structure with k binary relations as a colored (di)graph on k
// clone copies of the domain: inside copy i the edge relation carries R_i,
// clones of one element are joined across copies, marks identify the copies,
// and original predicates ride along on every clone. Copy-1 clones keep the
// original ids so the round trip is exact.
BinaryStructure transduction_X(const BinaryStructure& m);

// Decodes: domain = copy-1 marked elements, R_1 = E there, R_i via the
// one-step existential clause through copy-i clones. Exact inverse of
// transduction_X on its image: m == interpretation_K(transduction_X(m)).
BinaryStructure interpretation_K(const BinaryStructure& colored);

// Id of the copy-th clone of an element in transduction_X(m). Copy 1 keeps
// the element's own id.
int transduction_clone_id(const BinaryStructure& m, int element, int copy);

// Text format: domain line, "relations p" then per relation a
// "name sym|arb m" header and m pair lines, "predicates q" then per
// predicate "name m <ids>".
std::string structure_to_text(const BinaryStructure& m);
BinaryStructure structure_from_text(const std::string& text);

}  // namespace vmlab
