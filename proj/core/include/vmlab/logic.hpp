#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmlab/formula.hpp"
#include "vmlab/structures.hpp"

namespace vmlab {

using Assignment = std::map<std::string, int>;

// Evaluation is exponential in quantifier rank; these caps fail loudly
// instead of degrading. Raise them explicitly for bigger runs.
struct EvalLimits {
  int max_domain = 32;
  int max_rank = 5;
  int max_ladder_cap = 8;
};

// Standard FO semantics by recursion; quantifiers range over the domain and
// subformula results are memoized per (subformula, assignment restricted to
// its free variables). EvalError if a free variable is unassigned or a
// symbol is missing from the structure; CapacityError above the caps.
bool evaluate(const BinaryStructure& s, const FormulaPtr& phi, const Assignment& a,
              const EvalLimits& lim = {});

// Largest n <= cap such that elements a_1..a_n, b_1..b_n (each side pairwise
// distinct; the sides may intersect) satisfy phi(a_i, b_j) iff i <= j.
// Exhaustive search extending partial ladders only.
int ladder_index(const BinaryStructure& s, const FormulaPtr& phi, const std::string& xvar,
                 const std::string& yvar, int cap, const EvalLimits& lim = {});

// a_1..a_n plus one b_J per J, keyed by bit mask over [n].
struct IndependenceWitness {
  std::vector<int> a;
  std::map<unsigned, int> b;
};

// Witness with phi(a_i, b_J) iff i in J, or nullopt after exhausting the
// space. Brute force, n <= 3.
std::optional<IndependenceWitness> independence_witness(const BinaryStructure& s,
                                                        const FormulaPtr& phi,
                                                        const std::string& xvar,
                                                        const std::string& yvar, int n,
                                                        const EvalLimits& lim = {});

// Encodes sigma as a permutation graph on 2n vertices (sigma's values on the
// even positions, fresh top values on the odd ones), marks the two position
// classes A and B, recovers two definable linear orders on A with the given
// formulas lt1(x,y) and lt2(x,y), and reports whether the permutation they
// define is sigma again.
bool permutation_roundtrip(const std::vector<int>& sigma, const FormulaLibrary& orders,
                           const EvalLimits& lim = {});

}  // namespace vmlab
