#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "vmlab/errors.hpp"

namespace vmlab {

// Symbols a formula may use: binary relation names and unary predicate names.
struct Signature {
  std::set<std::string> binary_rels;
  std::set<std::string> unary_preds;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// First-order AST over one or more binary relations, unary predicates, and
// equality. Quantifiers and negation use lhs only.
struct Formula {
  enum class Kind { Eq, Rel, Pred, Not, And, Or, Implies, Iff, Exists, Forall };

  Kind kind;
  std::string symbol;      // relation/predicate name, or the bound variable
  std::string var1, var2;  // atom arguments
  FormulaPtr lhs, rhs;

  static FormulaPtr eq(std::string x, std::string y);
  static FormulaPtr rel(std::string name, std::string x, std::string y);
  static FormulaPtr pred(std::string name, std::string x);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists(std::string v, FormulaPtr f);
  static FormulaPtr forall(std::string v, FormulaPtr f);
};

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);
std::set<std::string> free_variables(const FormulaPtr& f);
int quantifier_rank(const FormulaPtr& f);

class FormulaLibrary;

// Concrete syntax: ASCII keywords and operators with precedence
// ~  >  &  >  |  >  ->  >  <->, quantifiers (forall x ..., exists x ...)
// binding as far right as possible. Atoms: R(x,y), P(x), x = y. Names from
// the library are inlined as macros with capture-avoiding renaming.
FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const FormulaLibrary* lib = nullptr);

// Precedence-aware printing; parse(print(f)) reproduces f exactly.
std::string print_formula(const FormulaPtr& f);

// A file of named formulas, one block per line: "name(v1,...,vk) := body".
// Later definitions may invoke earlier ones. '#' starts a comment.
class FormulaLibrary {
 public:
  static FormulaLibrary parse(const std::string& text, const Signature& sig);
  static FormulaLibrary parse_file(const std::string& path, const Signature& sig);

  bool contains(const std::string& name) const { return defs_.count(name) != 0; }
  const FormulaPtr& get(const std::string& name) const;
  const std::vector<std::string>& params(const std::string& name) const;
  std::vector<std::string> names() const;  // in definition order

  // Body of `name` with its parameters replaced by the given variables.
  FormulaPtr instantiate(const std::string& name, const std::vector<std::string>& args) const;

 private:
  struct Def {
    std::vector<std::string> params;
    FormulaPtr body;
  };
  std::map<std::string, Def> defs_;
  std::vector<std::string> order_;
};

}  // namespace vmlab
