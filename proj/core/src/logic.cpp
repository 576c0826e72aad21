#include "vmlab/logic.hpp"

#include <algorithm>

#include "vmlab/families.hpp"

namespace vmlab {

namespace {

// One evaluation pass: nodes are indexed, free variables precomputed per
// node, and results cached per (node, values of its free variables).
class Evaluator {
 public:
  Evaluator(const BinaryStructure& s, const FormulaPtr& root, const EvalLimits& lim)
      : s_(s) {
    if (s.size() > lim.max_domain)
      throw CapacityError("evaluate: domain size " + std::to_string(s.size()) +
                          " above cap " + std::to_string(lim.max_domain));
    if (quantifier_rank(root) > lim.max_rank)
      throw CapacityError("evaluate: quantifier rank " +
                          std::to_string(quantifier_rank(root)) + " above cap " +
                          std::to_string(lim.max_rank));
    index(root);
  }

  bool run(const FormulaPtr& f, Assignment& a) {
    int id = id_of_.at(f.get());
    std::vector<int> key;
    key.reserve(fv_[id].size());
    for (const auto& v : fv_[id]) {
      auto it = a.find(v);
      if (it == a.end()) throw EvalError("unassigned free variable " + v);
      key.push_back(it->second);
    }
    auto mk = std::make_pair(id, std::move(key));
    auto hit = memo_.find(mk);
    if (hit != memo_.end()) return hit->second;
    bool out;
    switch (f->kind) {
      case Formula::Kind::Eq:
        out = value(a, f->var1) == value(a, f->var2);
        break;
      case Formula::Kind::Rel: {
        if (!s_.has_relation(f->symbol))
          throw EvalError("relation " + f->symbol + " not interpreted in the structure");
        out = s_.rel(f->symbol, value(a, f->var1), value(a, f->var2));
        break;
      }
      case Formula::Kind::Pred: {
        if (!s_.has_predicate(f->symbol))
          throw EvalError("predicate " + f->symbol + " not interpreted in the structure");
        out = s_.pred(f->symbol, value(a, f->var1));
        break;
      }
      case Formula::Kind::Not:
        out = !run(f->lhs, a);
        break;
      case Formula::Kind::And:
        out = run(f->lhs, a) && run(f->rhs, a);
        break;
      case Formula::Kind::Or:
        out = run(f->lhs, a) || run(f->rhs, a);
        break;
      case Formula::Kind::Implies:
        out = !run(f->lhs, a) || run(f->rhs, a);
        break;
      case Formula::Kind::Iff:
        out = run(f->lhs, a) == run(f->rhs, a);
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        bool want = f->kind == Formula::Kind::Exists;
        out = !want;
        auto saved = a.find(f->symbol);
        std::optional<int> old;
        if (saved != a.end()) old = saved->second;
        for (int e : s_.domain()) {
          a[f->symbol] = e;
          if (run(f->lhs, a) == want) {
            out = want;
            break;
          }
        }
        if (old)
          a[f->symbol] = *old;
        else
          a.erase(f->symbol);
        break;
      }
      default:
        throw EvalError("unreachable");
    }
    memo_.emplace(std::move(mk), out);
    return out;
  }

 private:
  int value(const Assignment& a, const std::string& v) const {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("unassigned free variable " + v);
    if (!s_.has_element(it->second))
      throw EvalError("assignment maps " + v + " outside the domain");
    return it->second;
  }

  void index(const FormulaPtr& f) {
    if (!f || id_of_.count(f.get())) return;
    index(f->lhs);
    index(f->rhs);
    int id = static_cast<int>(fv_.size());
    id_of_[f.get()] = id;
    auto fvset = free_variables(f);
    fv_.emplace_back(fvset.begin(), fvset.end());
  }

  const BinaryStructure& s_;
  std::map<const Formula*, int> id_of_;
  std::vector<std::vector<std::string>> fv_;
  std::map<std::pair<int, std::vector<int>>, bool> memo_;
};

}  // namespace

bool evaluate(const BinaryStructure& s, const FormulaPtr& phi, const Assignment& a,
              const EvalLimits& lim) {
  Evaluator ev(s, phi, lim);
  Assignment work = a;
  return ev.run(phi, work);
}

namespace {

// Truth table of phi(x, y) over the whole domain, one evaluator pass so the
// memo is shared.
std::vector<std::vector<std::uint8_t>> pair_table(const BinaryStructure& s,
                                                  const FormulaPtr& phi,
                                                  const std::string& xvar,
                                                  const std::string& yvar,
                                                  const EvalLimits& lim) {
  auto free = free_variables(phi);
  for (const auto& v : free)
    if (v != xvar && v != yvar)
      throw EvalError("formula has unexpected free variable " + v);
  Evaluator ev(s, phi, lim);
  int n = s.size();
  std::vector<std::vector<std::uint8_t>> t(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Assignment a{{xvar, s.domain()[i]}, {yvar, s.domain()[j]}};
      t[i][j] = ev.run(phi, a) ? 1 : 0;
    }
  return t;
}

struct LadderSearch {
  const std::vector<std::vector<std::uint8_t>>& t;
  int n, cap;
  std::vector<int> as, bs;
  int best = 0;

  bool used_a(int e) const { return std::find(as.begin(), as.end(), e) != as.end(); }
  bool used_b(int e) const { return std::find(bs.begin(), bs.end(), e) != bs.end(); }

  // Extend with a pair (a_m, b_m): phi(a_i, b_m) for all i <= m, and
  // phi(a_m, b_j) false for all j < m.
  void rec() {
    int m = static_cast<int>(as.size());
    best = std::max(best, m);
    if (m == cap) return;
    for (int a = 0; a < n; ++a) {
      if (used_a(a)) continue;
      bool ok_a = true;
      for (int j = 0; j < m; ++j)
        if (t[a][bs[j]]) {
          ok_a = false;
          break;
        }
      if (!ok_a) continue;
      for (int b = 0; b < n; ++b) {
        if (used_b(b)) continue;
        if (!t[a][b]) continue;
        bool ok = true;
        for (int i = 0; i < m; ++i)
          if (!t[as[i]][b]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        as.push_back(a);
        bs.push_back(b);
        rec();
        as.pop_back();
        bs.pop_back();
        if (best == cap) return;
      }
    }
  }
};

}  // namespace

int ladder_index(const BinaryStructure& s, const FormulaPtr& phi, const std::string& xvar,
                 const std::string& yvar, int cap, const EvalLimits& lim) {
  if (cap > lim.max_ladder_cap)
    throw CapacityError("ladder_index: cap " + std::to_string(cap) + " above limit " +
                        std::to_string(lim.max_ladder_cap));
  if (cap <= 0) return 0;
  auto t = pair_table(s, phi, xvar, yvar, lim);
  LadderSearch search{t, s.size(), cap, {}, {}};
  search.rec();
  return search.best;
}

std::optional<IndependenceWitness> independence_witness(const BinaryStructure& s,
                                                        const FormulaPtr& phi,
                                                        const std::string& xvar,
                                                        const std::string& yvar, int n,
                                                        const EvalLimits& lim) {
  if (n > 3) throw CapacityError("independence_witness: n above the brute-force bound 3");
  if (n < 1) throw DomainError("independence_witness needs n >= 1");
  auto t = pair_table(s, phi, xvar, yvar, lim);
  int d = s.size();
  if (d == 0) return std::nullopt;

  // Every element has one trace against a fixed a-tuple, so distinct traces
  // give distinct b's for free; a witness exists iff all 2^n traces are
  // inhabited. a-tuples in lexicographic order, least witness returned.
  std::vector<int> idx(n, 0);
  std::vector<int> a(n);
  auto next_tuple = [&]() {
    for (int p = n - 1; p >= 0; --p) {
      if (++idx[p] < d) {
        for (int q = p + 1; q < n; ++q) idx[q] = 0;
        return true;
      }
    }
    return false;
  };
  do {
    bool distinct = true;
    for (int p = 0; p < n && distinct; ++p)
      for (int q = p + 1; q < n; ++q)
        if (idx[p] == idx[q]) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    for (int p = 0; p < n; ++p) a[p] = idx[p];
    std::map<unsigned, int> rep;
    for (int e = 0; e < d; ++e) {
      unsigned trace = 0;
      for (int p = 0; p < n; ++p)
        if (t[a[p]][e]) trace |= 1u << p;
      rep.emplace(trace, e);  // keeps the least element per trace
    }
    if (rep.size() == (1u << n)) {
      IndependenceWitness w;
      for (int p = 0; p < n; ++p) w.a.push_back(s.domain()[a[p]]);
      for (auto [mask, e] : rep) w.b[mask] = s.domain()[e];
      return w;
    }
  } while (next_tuple());
  return std::nullopt;
}

bool permutation_roundtrip(const std::vector<int>& sigma, const FormulaLibrary& orders,
                           const EvalLimits& lim) {
  int n = static_cast<int>(sigma.size());
  if (n < 1) throw DomainError("permutation_roundtrip needs n >= 1");
  // sigma-hat on [2n]: even positions carry sigma, odd positions carry the
  // values n+1..2n. The A-marked even positions then satisfy: position order
  // is definable from adjacency into B, and sigma's order is the definable
  // order twisted by the edges inside A.
  std::vector<int> hat(2 * n);
  for (int i = 1; i <= n; ++i) {
    hat[2 * i - 1 - 1] = n + i;  // position 2i-1
    hat[2 * i - 1] = sigma[i - 1];  // position 2i
  }
  LabeledGraph pg = permutation_graph(hat);
  BinaryStructure base = structure_from_graph(pg.graph);
  std::vector<BinaryStructure::RelationSpec> rels;
  {
    BinaryStructure::RelationSpec e{"E", true, {}};
    const auto& dom = base.domain();
    for (size_t i = 0; i < dom.size(); ++i)
      for (size_t j = i + 1; j < dom.size(); ++j)
        if (base.rel("E", dom[i], dom[j])) e.pairs.emplace_back(dom[i], dom[j]);
    rels.push_back(std::move(e));
  }
  BinaryStructure::PredicateSpec amark{"A", {}}, bmark{"B", {}};
  for (int i = 1; i <= n; ++i) {
    amark.members.insert(2 * i);
    bmark.members.insert(2 * i - 1);
  }
  BinaryStructure s(base.domain(), rels, {amark, bmark});

  const FormulaPtr& lt1 = orders.get("lt1");
  const FormulaPtr& lt2 = orders.get("lt2");
  Evaluator e1(s, lt1, lim), e2(s, lt2, lim);
  auto less = [&](Evaluator& ev, const FormulaPtr& f, int x, int y) {
    Assignment a{{"x", x}, {"y", y}};
    return ev.run(f, a);
  };

  // rank every A-element in both orders
  std::vector<int> avs;
  for (int i = 1; i <= n; ++i) avs.push_back(2 * i);
  auto ranks = [&](Evaluator& ev, const FormulaPtr& f) {
    std::map<int, int> rank;
    for (int x : avs) {
      int r = 1;
      for (int y : avs)
        if (y != x && less(ev, f, y, x) && !less(ev, f, x, y)) ++r;
      rank[x] = r;
    }
    return rank;
  };
  auto r1 = ranks(e1, lt1);
  auto r2 = ranks(e2, lt2);

  // both must be linear orders
  auto is_perm = [&](std::map<int, int>& r) {
    std::vector<bool> seen(n + 1, false);
    for (auto [x, v] : r) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };
  if (!is_perm(r1) || !is_perm(r2)) return false;

  std::vector<int> recovered(n);
  for (int x : avs) recovered[r1[x] - 1] = r2[x];
  return recovered == sigma;
}

}  // namespace vmlab
