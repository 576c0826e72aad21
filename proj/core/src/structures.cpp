#include "vmlab/structures.hpp"

#include <algorithm>
#include <sstream>

namespace vmlab {

BinaryStructure::BinaryStructure(std::vector<int> domain, std::vector<RelationSpec> relations,
                                 std::vector<PredicateSpec> predicates) {
  std::sort(domain.begin(), domain.end());
  for (size_t i = 0; i + 1 < domain.size(); ++i)
    if (domain[i] == domain[i + 1]) throw DomainError("duplicate element id");
  domain_ = std::move(domain);
  int n = size();
  for (auto& r : relations) {
    rel_names_.push_back(r.name);
    rel_sym_.push_back(r.symmetric);
    std::vector<std::uint8_t> bits(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : r.pairs) {
      int su = slot(u), sv = slot(v);
      if (r.symmetric) {
        if (su == sv) throw DomainError("symmetric relation " + r.name + " with a loop");
        bits[su * n + sv] = bits[sv * n + su] = 1;
      } else {
        bits[su * n + sv] = 1;
      }
    }
    rel_bits_.push_back(std::move(bits));
  }
  for (auto& p : predicates) {
    for (int v : p.members) slot(v);
    pred_names_.push_back(p.name);
    pred_members_.push_back(std::move(p.members));
  }
}

bool BinaryStructure::has_element(int v) const {
  return std::binary_search(domain_.begin(), domain_.end(), v);
}

int BinaryStructure::slot(int v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v)
    throw DomainError("unknown element id " + std::to_string(v));
  return static_cast<int>(it - domain_.begin());
}

int BinaryStructure::relation_index(const std::string& name) const {
  for (size_t i = 0; i < rel_names_.size(); ++i)
    if (rel_names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool BinaryStructure::rel(int idx, int u, int v) const {
  if (idx < 0 || idx >= relation_count()) throw DomainError("relation index out of range");
  return rel_bits_[idx][slot(u) * size() + slot(v)] != 0;
}

bool BinaryStructure::rel(const std::string& name, int u, int v) const {
  int idx = relation_index(name);
  if (idx < 0) throw DomainError("unknown relation " + name);
  return rel(idx, u, v);
}

bool BinaryStructure::has_predicate(const std::string& name) const {
  for (const auto& p : pred_names_)
    if (p == name) return true;
  return false;
}

bool BinaryStructure::pred(const std::string& name, int v) const {
  slot(v);
  return predicate_members(name).count(v) != 0;
}

const VertexSet& BinaryStructure::predicate_members(const std::string& name) const {
  for (size_t i = 0; i < pred_names_.size(); ++i)
    if (pred_names_[i] == name) return pred_members_[i];
  throw DomainError("unknown predicate " + name);
}

bool BinaryStructure::independent_in(int idx, const VertexSet& s) const {
  for (VertexId u : s)
    for (VertexId v : s)
      if (u != v && rel(idx, u, v)) return false;
  return true;
}

bool BinaryStructure::operator==(const BinaryStructure& o) const {
  return domain_ == o.domain_ && rel_names_ == o.rel_names_ && rel_sym_ == o.rel_sym_ &&
         rel_bits_ == o.rel_bits_ && pred_names_ == o.pred_names_ &&
         pred_members_ == o.pred_members_;
}

BinaryStructure structure_from_graph(const Graph& g, const std::string& rel_name) {
  BinaryStructure::RelationSpec r{rel_name, true, {}};
  const auto& ids = g.vertices();
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) r.pairs.emplace_back(ids[i], ids[j]);
  return BinaryStructure(ids, {r}, {});
}

Graph graph_from_structure(const BinaryStructure& m, const std::string& rel_name) {
  int idx = m.relation_index(rel_name);
  if (idx < 0) throw DomainError("unknown relation " + rel_name);
  if (!m.relation_symmetric(idx))
    throw PreconditionError("relation " + rel_name + " is not symmetric-flagged");
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto& dom = m.domain();
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = i + 1; j < dom.size(); ++j)
      if (m.rel(idx, dom[i], dom[j])) edges.emplace_back(dom[i], dom[j]);
  return Graph::from_edges(dom, edges);
}

BinaryStructure lc_structure(const BinaryStructure& m, int rel_idx, int v) {
  if (rel_idx < 0 || rel_idx >= m.relation_count())
    throw DomainError("relation index out of range");
  if (!m.relation_symmetric(rel_idx))
    throw PreconditionError("lc_structure: relation " + m.relation_name(rel_idx) +
                            " is not symmetric-flagged");
  int sv = m.slot(v), n = m.size();
  BinaryStructure out = m;
  std::vector<int> nb;
  for (int t = 0; t < n; ++t)
    if (m.rel_bits_[rel_idx][sv * n + t]) nb.push_back(t);
  auto& bits = out.rel_bits_[rel_idx];
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      bits[nb[i] * n + nb[j]] ^= 1;
      bits[nb[j] * n + nb[i]] ^= 1;
    }
  return out;
}

namespace {

BinaryStructure restrict_structure(const BinaryStructure& m, const VertexSet& drop) {
  std::vector<int> dom;
  for (int v : m.domain())
    if (!drop.count(v)) dom.push_back(v);
  std::vector<BinaryStructure::RelationSpec> rels;
  for (int idx = 0; idx < m.relation_count(); ++idx) {
    BinaryStructure::RelationSpec r{m.relation_name(idx), m.relation_symmetric(idx), {}};
    for (int u : dom)
      for (int v : dom) {
        if (m.relation_symmetric(idx) && v <= u) continue;
        if (m.rel(idx, u, v)) r.pairs.emplace_back(u, v);
      }
    rels.push_back(std::move(r));
  }
  std::vector<BinaryStructure::PredicateSpec> preds;
  for (int idx = 0; idx < m.predicate_count(); ++idx) {
    BinaryStructure::PredicateSpec p{m.predicate_name(idx), {}};
    for (int v : m.predicate_members(m.predicate_name(idx)))
      if (!drop.count(v)) p.members.insert(v);
    preds.push_back(std::move(p));
  }
  return BinaryStructure(dom, rels, preds);
}

}  // namespace

BinaryStructure depth1_vm_structure(const BinaryStructure& m,
                                    const std::map<int, VertexSet>& sets,
                                    const VertexSet& deletions) {
  BinaryStructure cur = m;
  for (const auto& [idx, iset] : sets) {
    if (idx < 0 || idx >= m.relation_count())
      throw DomainError("relation index out of range");
    if (!cur.relation_symmetric(idx))
      throw PreconditionError("depth1_vm_structure: relation " + cur.relation_name(idx) +
                              " is not symmetric-flagged");
    if (!cur.independent_in(idx, iset))
      throw FaultyComplementation("set for relation " + cur.relation_name(idx) +
                                      " is not independent at its application point",
                                  idx);
    // Set complementation: R'(x,y) = R(x,y) + sum over z in I of R(x,z)R(z,y).
    int n = cur.size();
    std::vector<std::uint8_t> next = cur.rel_bits_[idx];
    std::vector<int> islots;
    for (int v : iset) islots.push_back(cur.slot(v));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        std::uint8_t acc = 0;
        for (int z : islots)
          acc ^= cur.rel_bits_[idx][x * n + z] & cur.rel_bits_[idx][z * n + y];
        next[x * n + y] ^= acc;
        next[y * n + x] ^= acc;
      }
    cur.rel_bits_[idx] = std::move(next);
  }
  for (int v : deletions) cur.slot(v);
  return restrict_structure(cur, deletions);
}

namespace {

std::string copy_mark_name(int i, const std::string& rel_name, bool symmetric) {
  return "copy" + std::to_string(i) + ":" + rel_name + ":" + (symmetric ? "sym" : "arb");
}

}  // namespace

namespace {

int clone_stride(const BinaryStructure& m) {
  int stride = 0;
  for (int v : m.domain()) stride = std::max(stride, v + 1);
  return stride == 0 ? 1 : stride;
}

}  // namespace

int transduction_clone_id(const BinaryStructure& m, int element, int copy) {
  return element + (copy - 1) * clone_stride(m);
}

BinaryStructure transduction_X(const BinaryStructure& m) {
  int k = m.relation_count();
  if (k < 1) throw DomainError("transduction_X needs at least one binary relation");
  for (int i = 0; i < k; ++i)
    for (int v : m.domain())
      if (m.rel(i, v, v))
        throw DomainError("transduction_X cannot encode loops (relation " +
                          m.relation_name(i) + ")");
  int stride = clone_stride(m);
  // clone(v, copy c) = v + (c-1)*stride; copy 1 keeps original ids
  auto clone = [&](int v, int c) { return v + (c - 1) * stride; };

  std::vector<int> dom;
  for (int c = 1; c <= k; ++c)
    for (int v : m.domain()) dom.push_back(clone(v, c));

  bool all_sym = true;
  for (int i = 0; i < k; ++i)
    if (!m.relation_symmetric(i)) all_sym = false;

  BinaryStructure::RelationSpec edge{"E", all_sym, {}};
  // within copy i: R_i between the i-th clones
  for (int i = 1; i <= k; ++i)
    for (int u : m.domain())
      for (int v : m.domain()) {
        if (u == v) continue;
        if (!m.rel(i - 1, u, v)) continue;
        if (all_sym && clone(u, i) > clone(v, i)) continue;  // dedupe symmetric pairs
        edge.pairs.emplace_back(clone(u, i), clone(v, i));
      }
  // across copies: clones of one element are pairwise joined
  for (int v : m.domain())
    for (int c = 1; c <= k; ++c)
      for (int d = c + 1; d <= k; ++d) {
        edge.pairs.emplace_back(clone(v, c), clone(v, d));
        if (!all_sym) edge.pairs.emplace_back(clone(v, d), clone(v, c));
      }

  std::vector<BinaryStructure::PredicateSpec> preds;
  for (int i = 1; i <= k; ++i) {
    BinaryStructure::PredicateSpec p{
        copy_mark_name(i, m.relation_name(i - 1), m.relation_symmetric(i - 1)), {}};
    for (int v : m.domain()) p.members.insert(clone(v, i));
    preds.push_back(std::move(p));
  }
  for (int t = 0; t < m.predicate_count(); ++t) {
    BinaryStructure::PredicateSpec p{m.predicate_name(t), {}};
    for (int v : m.predicate_members(m.predicate_name(t)))
      for (int c = 1; c <= k; ++c) p.members.insert(clone(v, c));
    preds.push_back(std::move(p));
  }
  return BinaryStructure(dom, {edge}, preds);
}

BinaryStructure interpretation_K(const BinaryStructure& colored) {
  int eidx = colored.relation_index("E");
  if (eidx < 0) throw DomainError("interpretation_K: no edge relation E");

  // copy marks carry the original relation name and flag
  struct Mark {
    int copy;
    std::string rel_name;
    bool symmetric;
    const VertexSet* members;
  };
  std::vector<Mark> marks;
  for (int t = 0; t < colored.predicate_count(); ++t) {
    const std::string& name = colored.predicate_name(t);
    if (name.rfind("copy", 0) != 0) continue;
    auto c1 = name.find(':');
    auto c2 = name.rfind(':');
    if (c1 == std::string::npos || c2 == c1) continue;
    int copy = std::stoi(name.substr(4, c1 - 4));
    marks.push_back({copy, name.substr(c1 + 1, c2 - c1 - 1), name.substr(c2 + 1) == "sym",
                     &colored.predicate_members(name)});
  }
  std::sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) {
    return a.copy < b.copy;
  });
  if (marks.empty() || marks[0].copy != 1)
    throw DomainError("interpretation_K: no copy-1 mark");

  std::vector<int> dom(marks[0].members->begin(), marks[0].members->end());
  std::vector<BinaryStructure::RelationSpec> rels;
  for (const auto& mk : marks) {
    BinaryStructure::RelationSpec r{mk.rel_name, mk.symmetric, {}};
    for (int x : dom)
      for (int y : dom) {
        if (x == y) continue;
        if (mk.symmetric && y < x) continue;
        bool hold;
        if (mk.copy == 1) {
          hold = colored.rel(eidx, x, y);
        } else {
          // R_i(x,y) := exists x',y' in P_i with E(x,x'), E(y,y'), E(x',y')
          hold = false;
          for (int xp : *mk.members) {
            if (!colored.rel(eidx, x, xp)) continue;
            for (int yp : *mk.members) {
              if (colored.rel(eidx, y, yp) && colored.rel(eidx, xp, yp)) {
                hold = true;
                break;
              }
            }
            if (hold) break;
          }
        }
        if (hold) r.pairs.emplace_back(x, y);
      }
    rels.push_back(std::move(r));
  }
  std::vector<BinaryStructure::PredicateSpec> preds;
  for (int t = 0; t < colored.predicate_count(); ++t) {
    const std::string& name = colored.predicate_name(t);
    if (name.rfind("copy", 0) == 0 && name.find(':') != std::string::npos) continue;
    BinaryStructure::PredicateSpec p{name, {}};
    for (int v : dom)
      if (colored.pred(name, v)) p.members.insert(v);
    preds.push_back(std::move(p));
  }
  return BinaryStructure(dom, rels, preds);
}

std::string structure_to_text(const BinaryStructure& m) {
  std::ostringstream out;
  out << m.size();
  for (int v : m.domain()) out << ' ' << v;
  out << '\n';
  out << "relations " << m.relation_count() << '\n';
  for (int idx = 0; idx < m.relation_count(); ++idx) {
    std::vector<std::pair<int, int>> pairs;
    const auto& dom = m.domain();
    for (int u : dom)
      for (int v : dom) {
        if (u == v) continue;
        if (m.relation_symmetric(idx) && v < u) continue;
        if (m.rel(idx, u, v)) pairs.emplace_back(u, v);
      }
    out << m.relation_name(idx) << ' ' << (m.relation_symmetric(idx) ? "sym" : "arb") << ' '
        << pairs.size() << '\n';
    for (auto [u, v] : pairs) out << u << ' ' << v << '\n';
  }
  out << "predicates " << m.predicate_count() << '\n';
  for (int idx = 0; idx < m.predicate_count(); ++idx) {
    const auto& mem = m.predicate_members(m.predicate_name(idx));
    out << m.predicate_name(idx) << ' ' << mem.size();
    for (int v : mem) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

BinaryStructure structure_from_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw ValidationError("structure: expected domain size");
  std::vector<int> dom(n);
  for (int i = 0; i < n; ++i)
    if (!(in >> dom[i])) throw ValidationError("structure: truncated domain");
  std::string kw;
  int p;
  if (!(in >> kw >> p) || kw != "relations")
    throw ValidationError("structure: expected 'relations p'");
  std::vector<BinaryStructure::RelationSpec> rels;
  for (int t = 0; t < p; ++t) {
    std::string name, flag;
    long cnt;
    if (!(in >> name >> flag >> cnt) || (flag != "sym" && flag != "arb"))
      throw ValidationError("structure: expected 'name sym|arb m'");
    BinaryStructure::RelationSpec r{name, flag == "sym", {}};
    for (long x = 0; x < cnt; ++x) {
      int u, v;
      if (!(in >> u >> v)) throw ValidationError("structure: truncated relation");
      r.pairs.emplace_back(u, v);
    }
    rels.push_back(std::move(r));
  }
  int q;
  if (!(in >> kw >> q) || kw != "predicates")
    throw ValidationError("structure: expected 'predicates q'");
  std::vector<BinaryStructure::PredicateSpec> preds;
  for (int t = 0; t < q; ++t) {
    std::string name;
    long cnt;
    if (!(in >> name >> cnt)) throw ValidationError("structure: expected 'name m ids'");
    BinaryStructure::PredicateSpec pr{name, {}};
    for (long x = 0; x < cnt; ++x) {
      int v;
      if (!(in >> v)) throw ValidationError("structure: truncated predicate");
      pr.members.insert(v);
    }
    preds.push_back(std::move(pr));
  }
  return BinaryStructure(std::move(dom), std::move(rels), std::move(preds));
}

}  // namespace vmlab
