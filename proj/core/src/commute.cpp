#include "vmlab/commute.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "vmlab/vminor.hpp"

namespace vmlab {

Flip commute0(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("commute0: i must be independent in g");
  if (!apply_flip(g, f).is_independent(i))
    throw PreconditionError("commute0: i must be independent in g (+) f");
  if (g.order() == 0) return Flip::identity(1, {});

  const int k = f.class_count();

  // zeta(a,b) = sum over z in i of tau(a, iota(z)) * tau(b, iota(z))
  std::vector<std::vector<std::uint8_t>> zeta(k + 1, std::vector<std::uint8_t>(k + 1, 0));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      std::uint8_t acc = 0;
      for (VertexId z : i) {
        int cz = f.class_of(z);
        acc ^= static_cast<std::uint8_t>((f.tau(a, cz) & f.tau(b, cz)) ? 1 : 0);
      }
      zeta[a][b] = acc;
    }

  // sigma(v, a) = sum over z in i of E(v,z) * tau(a, iota(z))
  auto sigma_vector = [&](VertexId v) {
    std::vector<std::uint8_t> s(k + 1, 0);
    for (VertexId z : i) {
      if (z == v || !g.adjacent(v, z)) continue;
      int cz = f.class_of(z);
      for (int a = 1; a <= k; ++a) s[a] ^= static_cast<std::uint8_t>(f.tau(a, cz) ? 1 : 0);
    }
    return s;
  };

  // The (class, sigma-vector) composite labels are exact on pairs with both
  // endpoints outside i. For an endpoint u in i the required entry is the
  // plain tau(iota(u), iota(v)): expanding the flipped adjacency as
  // E + tau is wrong at z = u, where E_{g(+)f}(u,u) stays 0 no matter what
  // tau(c,c) says. Classes with tau(c,c) = 1 holding an element of i (a
  // single element, by independence on the flipped side) therefore get a
  // separate label carrying the plain-tau row; for every other class the
  // composite label already produces the plain value and the element of i
  // shares the (class, zero-vector) label. Worst case k*2^k + k classes.
  struct Label {
    int cls;
    bool special;
    std::vector<std::uint8_t> vec;
    bool operator<(const Label& o) const {
      if (cls != o.cls) return cls < o.cls;
      if (special != o.special) return special < o.special;
      return vec < o.vec;
    }
  };
  std::map<Label, int> index_of;
  std::map<VertexId, Label> label_of;
  for (VertexId v : g.vertices()) {
    int cls = f.class_of(v);
    Label lab;
    if (i.count(v) && f.tau(cls, cls))
      lab = Label{cls, true, {}};
    else
      lab = Label{cls, false, sigma_vector(v)};
    index_of.emplace(lab, 0);
    label_of.emplace(v, std::move(lab));
  }
  int next = 0;
  for (auto& [lab, idx] : index_of) idx = ++next;

  std::map<VertexId, int> iota2;
  for (const auto& [v, lab] : label_of) iota2[v] = index_of.at(lab);

  std::vector<const Label*> labels(next + 1, nullptr);
  for (const auto& [lab, idx] : index_of) labels[idx] = &lab;

  std::vector<std::vector<std::uint8_t>> tau2(next, std::vector<std::uint8_t>(next, 0));
  for (int x = 1; x <= next; ++x)
    for (int y = 1; y <= next; ++y) {
      const Label& lu = *labels[x];
      const Label& lv = *labels[y];
      if (lu.special || lv.special) {
        tau2[x - 1][y - 1] = f.tau(lu.cls, lv.cls) ? 1 : 0;
      } else {
        tau2[x - 1][y - 1] = static_cast<std::uint8_t>(
            (f.tau(lu.cls, lv.cls) ? 1 : 0) ^ zeta[lu.cls][lv.cls] ^ lu.vec[lv.cls] ^
            lv.vec[lu.cls]);
      }
    }

  Flip out(next, std::move(iota2), std::move(tau2));
  if (out.class_count() > k * (1 << k) + k)
    throw InternalInvariantError("commute0: class count above k * 2^k + k");
  return out;
}

Flip commute0b(const Graph& g, const Flip& f, const VertexSet& i, const VertexSet& j) {
  if (j.empty()) throw PreconditionError("commute0b: j must be nonempty");
  for (VertexId v : j)
    if (!i.count(v)) throw PreconditionError("commute0b: j must be a subset of i");
  if (!is_homogeneous(g, f, i))
    throw PreconditionError("commute0b: i must be f-homogeneous in g");
  int cls = f.class_of(*j.begin());
  for (VertexId v : j)
    if (f.class_of(v) != cls)
      throw PreconditionError("commute0b: j must lie inside one f-class");
  if (!g.is_independent(j))
    throw PreconditionError("commute0b: j must be independent in g");
  Graph flipped = apply_flip(g, f);
  if (!flipped.is_independent(j))
    throw PreconditionError("commute0b: j must be independent in g (+) f");

  Flip out = commute0(g, f, j);

  // Verified on every invocation, not sampled. Compatibility is checked on
  // i \ j, which is what the recursion consumes and what the construction
  // guarantees; on all of i it additionally holds when j is a whole class
  // trace of i (splitting j off its own class cannot be avoided when the
  // class is active on the diagonal).
  Graph gj = local_complement_set(g, j);
  Graph left = apply_flip(gj, out);
  Graph right = local_complement_set(flipped, j);
  if (!(left == right))
    throw InternalInvariantError("commute0b: commutation equality failed");
  VertexSet rest;
  for (VertexId v : i)
    if (!j.count(v)) rest.insert(v);
  if (!is_compatible_on(f, out, rest))
    throw InternalInvariantError("commute0b: output is not compatible with f on i \\ j");
  bool j_is_whole_trace = true;
  for (VertexId v : rest)
    if (f.class_of(v) == cls) j_is_whole_trace = false;
  if (j_is_whole_trace && !is_compatible_on(f, out, i))
    throw InternalInvariantError("commute0b: output is not i-compatible with f");
  if (!is_homogeneous(gj, out, rest))
    throw InternalInvariantError("commute0b: i \\ j lost homogeneity in g * j");
  return out;
}

namespace {

CommuteResult commute_rec(const Graph& g, const Flip& f, const VertexSet& i) {
  if (i.empty()) return CommuteResult{{}, f, f.class_count()};

  auto traces = flip_classes_of(f, i);
  const VertexSet& first = traces.front();
  Graph flipped = apply_flip(g, f);

  VertexSet rest;
  for (VertexId v : i)
    if (!first.count(v)) rest.insert(v);

  if (flipped.is_independent(first)) {
    Flip f2 = commute0b(g, f, i, first);
    Graph g2 = local_complement_set(g, first);
    CommuteResult sub = commute_rec(g2, f2, rest);
    sub.partition.insert(sub.partition.begin(), first);
    return sub;
  }

  // first is a clique of size >= 2 on the flipped side: split off its
  // minimum-id element, commute it alone, then the remainder.
  VertexSet head{*first.begin()};
  VertexSet tail(std::next(first.begin()), first.end());

  Flip f2 = commute0b(g, f, i, head);
  Graph g2 = local_complement_set(g, head);
  VertexSet after_head;
  for (VertexId v : i)
    if (!head.count(v)) after_head.insert(v);
  Flip f3 = commute0b(g2, f2, after_head, tail);
  Graph g3 = local_complement_set(g2, tail);

  CommuteResult sub = commute_rec(g3, f3, rest);
  sub.partition.insert(sub.partition.begin(), tail);
  sub.partition.insert(sub.partition.begin(), head);
  return sub;
}

}  // namespace

CommuteResult commute_general(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("commute_general: i must be independent in g");
  int k = f.class_count();
  CommuteResult r = commute_rec(g, f, i);
  r.actual_class_count = r.flip.class_count();
  if (static_cast<int>(r.partition.size()) > 2 * k)
    throw InternalInvariantError("commute_general: more than 2k parts");
  return r;
}

CommuteResult commute_corollary_fwd(const Graph& g, const Flip& f, const VertexSet& i) {
  Graph flipped = apply_flip(g, f);
  if (!flipped.is_independent(i))
    throw PreconditionError("commute_corollary_fwd: i must be independent in g (+) f");
  // Run the general commutation on g (+) f; flip involution turns its equality into
  //   g * I_1 * ... * I_p (+) f' = (g (+) f) * i.
  return commute_general(flipped, f, i);
}

CommuteResult commute_corollary_bwd(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("commute_corollary_bwd: i must be independent in g");
  // Run the general commutation on g * i; complementation involution gives
  //   (g (+) f') * I_p * ... * I_1 = (g * i) (+) f.
  return commute_general(local_complement_set(g, i), f, i);
}

Flip spread_flip(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("spread_flip: i must be independent in g");
  int k = f.class_count();
  Flip cleaned = clean_flip(g, f, i);
  Flip out = commute0(g, cleaned, i);
  long bound = 2L * k * (1L << std::min(2 * k, 40));
  if (out.class_count() > bound)
    throw InternalInvariantError("spread_flip: class count above 2k * 2^(2k)");
  return out;
}

std::string commute_result_to_text(const CommuteResult& r) {
  std::ostringstream out;
  out << "parts " << r.partition.size() << '\n';
  for (const auto& p : r.partition) {
    out << p.size();
    for (VertexId v : p) out << ' ' << v;
    out << '\n';
  }
  out << "classes " << r.actual_class_count << '\n';
  out << flip_to_text(r.flip);
  return out.str();
}

}  // namespace vmlab
