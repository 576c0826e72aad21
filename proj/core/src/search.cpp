#include "vmlab/search.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "vmlab/flip.hpp"

namespace vmlab {

namespace {

// All independent sets of g by increasing size, lexicographic id order
// within one size. Includes the empty set.
std::vector<VertexSet> independent_sets_ordered(const Graph& g) {
  std::vector<VertexId> ids = g.vertices();
  int n = static_cast<int>(ids.size());
  std::vector<std::vector<VertexSet>> by_size(n + 1);
  by_size[0].push_back({});
  std::vector<int> stack;
  // enumerate subsets in lex order via dfs, pruning on the first edge
  std::function<void(int)> rec = [&](int start) {
    for (int t = start; t < n; ++t) {
      bool ok = true;
      for (int s : stack)
        if (g.adjacent(ids[s], ids[t])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      stack.push_back(t);
      VertexSet set;
      for (int s : stack) set.insert(ids[s]);
      by_size[stack.size()].push_back(std::move(set));
      rec(t + 1);
      stack.pop_back();
    }
  };
  rec(0);
  std::vector<VertexSet> out;
  for (auto& bucket : by_size)
    for (auto& s : bucket) out.push_back(std::move(s));
  return out;
}

}  // namespace

ContainmentResult is_depth_r_vminor(const Graph& g, const Graph& h, int r,
                                    const SearchCaps& caps) {
  if (g.order() > caps.max_order)
    throw CapacityError("is_depth_r_vminor: order " + std::to_string(g.order()) +
                        " above cap " + std::to_string(caps.max_order));
  if (r < 0 || r > caps.max_depth)
    throw CapacityError("is_depth_r_vminor: depth " + std::to_string(r) + " above cap " +
                        std::to_string(caps.max_depth));

  struct Node {
    Graph graph;
    std::vector<VertexSet> steps;
  };
  ContainmentResult res;
  std::set<CanonicalForm> seen;
  std::vector<Node> reachable;  // in first-seen order, shallowest first

  seen.insert(canonical_form(g, caps.canonical_cap));
  reachable.push_back({g, {}});
  size_t level_begin = 0;
  for (int depth = 0; depth < r; ++depth) {
    size_t level_end = reachable.size();
    for (size_t t = level_begin; t < level_end; ++t) {
      Graph cur = reachable[t].graph;  // copy: reachable may grow
      std::vector<VertexSet> steps = reachable[t].steps;
      for (const auto& iset : independent_sets_ordered(cur)) {
        if (iset.empty()) continue;  // dedup would reject it anyway
        Graph next = local_complement_set(cur, iset);
        ++res.stats.nodes_explored;
        auto cf = canonical_form(next, caps.canonical_cap);
        if (!seen.insert(cf).second) {
          ++res.stats.dedup_hits;
          continue;
        }
        auto next_steps = steps;
        next_steps.push_back(iset);
        reachable.push_back({std::move(next), std::move(next_steps)});
      }
    }
    level_begin = level_end;
  }

  // Deletions deferred: h is a depth-r minor iff it embeds induced into some
  // reachable deletion-free graph. First hit in first-seen order wins.
  for (const auto& node : reachable) {
    auto emb = find_induced_embedding(h, node.graph);
    if (!emb) continue;
    VMinorWitness w;
    w.steps = node.steps;
    VertexSet image;
    for (const auto& [hu, gu] : *emb) image.insert(gu);
    for (VertexId v : node.graph.vertices())
      if (!image.count(v)) w.deletions.insert(v);
    // Soundness check on every positive answer: the witness must replay to
    // an exact match of h under the embedding.
    Graph replay = apply_witness(g, w);
    if (replay.order() != h.order())
      throw InternalInvariantError("containment witness replays to the wrong order");
    for (VertexId u : h.vertices())
      for (VertexId v : h.vertices()) {
        if (u >= v) continue;
        if (h.adjacent(u, v) != replay.adjacent(emb->at(u), emb->at(v)))
          throw InternalInvariantError("containment witness does not replay to h");
      }
    res.found = true;
    res.witness = std::move(w);
    res.embedding = *emb;
    return res;
  }
  return res;
}

namespace {

void check_flip_caps(const Graph& g, int k, const FlipSearchCaps& caps) {
  if (g.order() > caps.max_order)
    throw CapacityError("flip search: order " + std::to_string(g.order()) + " above cap " +
                        std::to_string(caps.max_order));
  if (k < 1 || k > caps.max_k)
    throw CapacityError("flip search: k " + std::to_string(k) + " above cap " +
                        std::to_string(caps.max_k));
}

// Visits every k-flip on g's vertex set: all iota assignments, all symmetric
// tau tables.
template <typename F>
void for_each_flip(const Graph& g, int k, F&& visit) {
  int n = g.order();
  const auto& ids = g.vertices();
  std::vector<int> assign(n, 1);
  int tau_bits = k * (k + 1) / 2;
  for (;;) {
    for (unsigned tmask = 0; tmask < (1u << tau_bits); ++tmask) {
      std::vector<std::vector<std::uint8_t>> tau(k, std::vector<std::uint8_t>(k, 0));
      int bit = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          tau[i][j] = tau[j][i] = (tmask >> bit) & 1;
          ++bit;
        }
      std::map<VertexId, int> iota;
      for (int t = 0; t < n; ++t) iota[ids[t]] = assign[t];
      visit(Flip(k, std::move(iota), std::move(tau)));
    }
    int p = n - 1;
    while (p >= 0 && assign[p] == k) {
      assign[p] = 1;
      --p;
    }
    if (p < 0) break;
    ++assign[p];
  }
}

}  // namespace

int flip_scatter_max(const Graph& g, const VertexSet& a, int r, int k,
                     const FlipSearchCaps& caps) {
  check_flip_caps(g, k, caps);
  for (VertexId v : a) g.slot_of(v);
  std::vector<VertexId> avec(a.begin(), a.end());
  int na = static_cast<int>(avec.size());
  int best = 0;
  for_each_flip(g, k, [&](const Flip& f) {
    Graph fg = apply_flip(g, f);
    auto dist = fg.all_distances();
    // too-close graph on a: edge when dist < r
    std::vector<unsigned> close(na, 0);
    for (int i = 0; i < na; ++i)
      for (int j = i + 1; j < na; ++j) {
        Distance d = dist[fg.slot_of(avec[i])][fg.slot_of(avec[j])];
        if (d < Distance::finite(r)) {
          close[i] |= 1u << j;
          close[j] |= 1u << i;
        }
      }
    // maximum independent set by subset enumeration
    for (unsigned sub = 0; sub < (1u << na); ++sub) {
      int size = __builtin_popcount(sub);
      if (size <= best) continue;
      bool ok = true;
      for (int i = 0; i < na && ok; ++i)
        if ((sub >> i) & 1)
          if (close[i] & sub) ok = false;
      if (ok) best = size;
    }
  });
  return best;
}

int flip_break_max(const Graph& g, const VertexSet& a, int r, int k,
                   const FlipSearchCaps& caps) {
  check_flip_caps(g, k, caps);
  for (VertexId v : a) g.slot_of(v);
  std::vector<VertexId> avec(a.begin(), a.end());
  int na = static_cast<int>(avec.size());
  int best = 0;
  for_each_flip(g, k, [&](const Flip& f) {
    Graph fg = apply_flip(g, f);
    auto dist = fg.all_distances();
    std::vector<unsigned> far(na, 0);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        if (i == j) continue;  // dist 0, never > r
        Distance d = dist[fg.slot_of(avec[i])][fg.slot_of(avec[j])];
        if (!(d <= Distance::finite(r))) far[i] |= 1u << j;
      }
    // balanced far bi-sets: each element in A1, A2 or neither
    std::function<void(int, unsigned, unsigned)> rec = [&](int t, unsigned a1, unsigned a2) {
      if (t == na) {
        best = std::max(best, std::min(__builtin_popcount(a1), __builtin_popcount(a2)));
        return;
      }
      rec(t + 1, a1, a2);
      // element t joins A1 if far from all of A2, and vice versa
      if ((far[t] & a2) == a2) rec(t + 1, a1 | (1u << t), a2);
      if ((far[t] & a1) == a1) rec(t + 1, a1, a2 | (1u << t));
    };
    rec(0, 0, 0);
  });
  return best;
}

}  // namespace vmlab
