#include "vmlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vmlab/graph_io.hpp"

namespace vmlab {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr Formula::eq(std::string x, std::string y) {
  return make({Kind::Eq, "", std::move(x), std::move(y), nullptr, nullptr});
}
FormulaPtr Formula::rel(std::string name, std::string x, std::string y) {
  return make({Kind::Rel, std::move(name), std::move(x), std::move(y), nullptr, nullptr});
}
FormulaPtr Formula::pred(std::string name, std::string x) {
  return make({Kind::Pred, std::move(name), std::move(x), "", nullptr, nullptr});
}
FormulaPtr Formula::negation(FormulaPtr f) {
  return make({Kind::Not, "", "", "", std::move(f), nullptr});
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return make({Kind::And, "", "", "", std::move(a), std::move(b)});
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Or, "", "", "", std::move(a), std::move(b)});
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Implies, "", "", "", std::move(a), std::move(b)});
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Iff, "", "", "", std::move(a), std::move(b)});
}
FormulaPtr Formula::exists(std::string v, FormulaPtr f) {
  return make({Kind::Exists, std::move(v), "", "", std::move(f), nullptr});
}
FormulaPtr Formula::forall(std::string v, FormulaPtr f) {
  return make({Kind::Forall, std::move(v), "", "", std::move(f), nullptr});
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->symbol != b->symbol || a->var1 != b->var1 ||
      a->var2 != b->var2)
    return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (!f) return;
  switch (f->kind) {
    case Formula::Kind::Eq:
      if (!bound.count(f->var1)) out.insert(f->var1);
      if (!bound.count(f->var2)) out.insert(f->var2);
      return;
    case Formula::Kind::Rel:
      if (!bound.count(f->var1)) out.insert(f->var1);
      if (!bound.count(f->var2)) out.insert(f->var2);
      return;
    case Formula::Kind::Pred:
      if (!bound.count(f->var1)) out.insert(f->var1);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool fresh = bound.insert(f->symbol).second;
      collect_free(f->lhs, bound, out);
      if (fresh) bound.erase(f->symbol);
      return;
    }
    default:
      collect_free(f->lhs, bound, out);
      collect_free(f->rhs, bound, out);
  }
}

}  // namespace

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

int quantifier_rank(const FormulaPtr& f) {
  if (!f) return 0;
  int sub = std::max(quantifier_rank(f->lhs), quantifier_rank(f->rhs));
  if (f->kind == Formula::Kind::Exists || f->kind == Formula::Kind::Forall) return sub + 1;
  return sub;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Ident, LPar, RPar, Comma, Eq, Not, And, Or, Implies, Iff, End };
  Type type;
  std::string text;
  int pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    int start = static_cast<int>(i_);
    if (i_ >= src_.size()) {
      tok_ = {Token::Type::End, "", start};
      return;
    }
    char c = src_[i_];
    auto one = [&](Token::Type t) {
      ++i_;
      tok_ = {t, std::string(1, c), start};
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
              src_[j] == '\''))
        ++j;
      tok_ = {Token::Type::Ident, src_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    switch (c) {
      case '(': one(Token::Type::LPar); return;
      case ')': one(Token::Type::RPar); return;
      case ',': one(Token::Type::Comma); return;
      case '=': one(Token::Type::Eq); return;
      case '~': one(Token::Type::Not); return;
      case '&': one(Token::Type::And); return;
      case '|': one(Token::Type::Or); return;
      case '-':
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
          i_ += 2;
          tok_ = {Token::Type::Implies, "->", start};
          return;
        }
        throw ParseError("stray '-'", start);
      case '<':
        if (i_ + 2 < src_.size() && src_[i_ + 1] == '-' && src_[i_ + 2] == '>') {
          i_ += 3;
          tok_ = {Token::Type::Iff, "<->", start};
          return;
        }
        throw ParseError("stray '<'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& src_;
  size_t i_ = 0;
  Token tok_;
};

// Rename every bound variable to a fresh name so macro expansion can never
// capture an argument variable.
FormulaPtr freshen(const FormulaPtr& f, std::map<std::string, std::string>& map, int& counter) {
  if (!f) return nullptr;
  auto sub = [&](const std::string& v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };
  switch (f->kind) {
    case Formula::Kind::Eq:
      return Formula::eq(sub(f->var1), sub(f->var2));
    case Formula::Kind::Rel:
      return Formula::rel(f->symbol, sub(f->var1), sub(f->var2));
    case Formula::Kind::Pred:
      return Formula::pred(f->symbol, sub(f->var1));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string fresh = "_q" + std::to_string(counter++);
      auto saved = map;
      map[f->symbol] = fresh;
      FormulaPtr body = freshen(f->lhs, map, counter);
      map = saved;
      return f->kind == Formula::Kind::Exists ? Formula::exists(fresh, std::move(body))
                                              : Formula::forall(fresh, std::move(body));
    }
    case Formula::Kind::Not:
      return Formula::negation(freshen(f->lhs, map, counter));
    case Formula::Kind::And:
      return Formula::conj(freshen(f->lhs, map, counter), freshen(f->rhs, map, counter));
    case Formula::Kind::Or:
      return Formula::disj(freshen(f->lhs, map, counter), freshen(f->rhs, map, counter));
    case Formula::Kind::Implies:
      return Formula::implies(freshen(f->lhs, map, counter), freshen(f->rhs, map, counter));
    case Formula::Kind::Iff:
      return Formula::iff(freshen(f->lhs, map, counter), freshen(f->rhs, map, counter));
  }
  throw EvalError("unreachable");
}

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig, const FormulaLibrary* lib)
      : lex_(text), sig_(sig), lib_(lib) {}

  FormulaPtr parse_full() {
    FormulaPtr f = formula();
    if (lex_.peek().type != Token::Type::End)
      throw ParseError("trailing input after formula", lex_.peek().pos);
    return f;
  }

  // lowest precedence; quantifier bodies restart here ("as far right as
  // possible")
  FormulaPtr formula() { return iff(); }

 private:
  FormulaPtr iff() {
    FormulaPtr f = implies();
    while (lex_.peek().type == Token::Type::Iff) {
      lex_.take();
      f = Formula::iff(std::move(f), implies());
    }
    return f;
  }

  FormulaPtr implies() {
    FormulaPtr f = disj();
    if (lex_.peek().type == Token::Type::Implies) {
      lex_.take();
      return Formula::implies(std::move(f), implies());  // right associative
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (lex_.peek().type == Token::Type::Or) {
      lex_.take();
      f = Formula::disj(std::move(f), conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    while (lex_.peek().type == Token::Type::And) {
      lex_.take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  FormulaPtr unary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Not) {
      lex_.take();
      return Formula::negation(unary());
    }
    if (t.type == Token::Type::Ident && (t.text == "forall" || t.text == "exists")) {
      Token q = lex_.take();
      Token v = expect(Token::Type::Ident, "quantified variable");
      FormulaPtr body = formula();
      return q.text == "forall" ? Formula::forall(v.text, std::move(body))
                                : Formula::exists(v.text, std::move(body));
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::LPar) {
      lex_.take();
      FormulaPtr f = formula();
      expect(Token::Type::RPar, "')'");
      return f;
    }
    if (t.type != Token::Type::Ident)
      throw ParseError("expected an atom, got '" + t.text + "'", t.pos);
    Token head = lex_.take();
    if (lex_.peek().type == Token::Type::LPar) {
      lex_.take();
      std::vector<std::string> args;
      args.push_back(expect(Token::Type::Ident, "variable").text);
      while (lex_.peek().type == Token::Type::Comma) {
        lex_.take();
        args.push_back(expect(Token::Type::Ident, "variable").text);
      }
      expect(Token::Type::RPar, "')'");
      if (sig_.binary_rels.count(head.text)) {
        if (args.size() != 2)
          throw ParseError("relation " + head.text + " takes two arguments", head.pos);
        return Formula::rel(head.text, args[0], args[1]);
      }
      if (sig_.unary_preds.count(head.text)) {
        if (args.size() != 1)
          throw ParseError("predicate " + head.text + " takes one argument", head.pos);
        return Formula::pred(head.text, args[0]);
      }
      if (lib_ && lib_->contains(head.text)) {
        if (lib_->params(head.text).size() != args.size())
          throw ParseError("formula " + head.text + " takes " +
                               std::to_string(lib_->params(head.text).size()) + " arguments",
                           head.pos);
        return lib_->instantiate(head.text, args);
      }
      throw ParseError("unknown symbol " + head.text, head.pos);
    }
    // bare identifier: must be the left side of an equality
    Token eq = lex_.take();
    if (eq.type != Token::Type::Eq)
      throw ParseError("expected '=' after variable " + head.text, eq.pos);
    Token rhs = expect(Token::Type::Ident, "variable");
    return Formula::eq(head.text, rhs.text);
  }

  Token expect(Token::Type type, const std::string& what) {
    Token t = lex_.take();
    if (t.type != type) throw ParseError("expected " + what + ", got '" + t.text + "'", t.pos);
    return t;
  }

  Lexer lex_;
  const Signature& sig_;
  const FormulaLibrary* lib_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const FormulaLibrary* lib) {
  return Parser(text, sig, lib).parse_full();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    // A quantifier's body runs as far right as possible, so a quantifier
    // used as an operand must always be parenthesized: lowest precedence.
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    default: return 5;  // atoms and ~
  }
}

void print_rec(const FormulaPtr& f, int parent_prec, std::ostringstream& out) {
  int prec = precedence(f->kind);
  bool paren = prec < parent_prec;
  if (paren) out << '(';
  switch (f->kind) {
    case Formula::Kind::Eq:
      out << f->var1 << " = " << f->var2;
      break;
    case Formula::Kind::Rel:
      out << f->symbol << '(' << f->var1 << ',' << f->var2 << ')';
      break;
    case Formula::Kind::Pred:
      out << f->symbol << '(' << f->var1 << ')';
      break;
    case Formula::Kind::Not:
      out << '~';
      print_rec(f->lhs, 6, out);  // parenthesize every non-atomic child
      break;
    case Formula::Kind::And:
      print_rec(f->lhs, 4, out);
      out << " & ";
      print_rec(f->rhs, 5, out);
      break;
    case Formula::Kind::Or:
      print_rec(f->lhs, 3, out);
      out << " | ";
      print_rec(f->rhs, 4, out);
      break;
    case Formula::Kind::Implies:
      print_rec(f->lhs, 3, out);
      out << " -> ";
      print_rec(f->rhs, 2, out);
      break;
    case Formula::Kind::Iff:
      print_rec(f->lhs, 1, out);
      out << " <-> ";
      print_rec(f->rhs, 2, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out << (f->kind == Formula::Kind::Exists ? "exists " : "forall ") << f->symbol << ' ';
      // The body extends as far right as possible, so it never needs parens
      // of its own here; but a quantifier used as an operand was already
      // parenthesized by the parent via prec 5.
      print_rec(f->lhs, 0, out);
      break;
  }
  if (paren) out << ')';
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  print_rec(f, 0, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Library
// ---------------------------------------------------------------------------

FormulaLibrary FormulaLibrary::parse(const std::string& text, const Signature& sig) {
  FormulaLibrary lib;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto def = line.find(":=");
    if (def == std::string::npos)
      throw ParseError("formula block needs 'name(args) := body' (line " +
                           std::to_string(lineno) + ")",
                       0);
    std::string head = line.substr(0, def), body = line.substr(def + 2);
    // head: name(v1,...,vk)
    std::string name;
    std::vector<std::string> params;
    {
      size_t i = 0;
      auto skip = [&] {
        while (i < head.size() && std::isspace(static_cast<unsigned char>(head[i]))) ++i;
      };
      skip();
      size_t start = i;
      while (i < head.size() &&
             (std::isalnum(static_cast<unsigned char>(head[i])) || head[i] == '_'))
        ++i;
      name = head.substr(start, i - start);
      skip();
      if (name.empty() || i >= head.size() || head[i] != '(')
        throw ParseError("bad formula head (line " + std::to_string(lineno) + ")", 0);
      ++i;
      while (true) {
        skip();
        start = i;
        while (i < head.size() &&
               (std::isalnum(static_cast<unsigned char>(head[i])) || head[i] == '_'))
          ++i;
        if (start == i)
          throw ParseError("bad parameter list (line " + std::to_string(lineno) + ")", 0);
        params.push_back(head.substr(start, i - start));
        skip();
        if (i < head.size() && head[i] == ',') {
          ++i;
          continue;
        }
        if (i < head.size() && head[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("bad parameter list (line " + std::to_string(lineno) + ")", 0);
      }
    }
    if (lib.defs_.count(name))
      throw ParseError("formula " + name + " defined twice (line " + std::to_string(lineno) +
                           ")",
                       0);
    FormulaPtr parsed = parse_formula(body, sig, &lib);
    auto free = free_variables(parsed);
    for (const auto& v : free)
      if (std::find(params.begin(), params.end(), v) == params.end())
        throw ParseError("formula " + name + " has undeclared free variable " + v +
                             " (line " + std::to_string(lineno) + ")",
                         0);
    lib.defs_[name] = Def{params, parsed};
    lib.order_.push_back(name);
  }
  return lib;
}

FormulaLibrary FormulaLibrary::parse_file(const std::string& path, const Signature& sig) {
  return parse(read_text_file(path), sig);
}

const FormulaPtr& FormulaLibrary::get(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw DomainError("no formula named " + name);
  return it->second.body;
}

const std::vector<std::string>& FormulaLibrary::params(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw DomainError("no formula named " + name);
  return it->second.params;
}

std::vector<std::string> FormulaLibrary::names() const { return order_; }

FormulaPtr FormulaLibrary::instantiate(const std::string& name,
                                       const std::vector<std::string>& args) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw DomainError("no formula named " + name);
  const Def& def = it->second;
  if (def.params.size() != args.size())
    throw DomainError("formula " + name + " takes " + std::to_string(def.params.size()) +
                      " arguments");
  static int counter = 0;
  std::map<std::string, std::string> map;
  for (size_t i = 0; i < args.size(); ++i) map[def.params[i]] = args[i];
  return freshen(def.body, map, counter);
}

}  // namespace vmlab
