#include "vmlab/canonical.hpp"

#include <algorithm>
#include <string>

namespace vmlab {

namespace {

// Iterated neighborhood-color refinement. Color ids are assigned by the rank
// of the (color, sorted neighbor colors) signature, so they are invariant
// under relabeling.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  const auto& ids = g.vertices();
  std::vector<int> color(n, 0);
  for (int it = 0; it < n; ++it) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && g.adjacent(ids[v], ids[u])) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), color[v]);
      sig[v] = {std::move(nb), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
      next[sorted[i].second] = rank;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct CanonSearch {
  const Graph& g;
  const std::vector<VertexId>& ids;
  int n;
  std::vector<int> class_at_pos;   // color required at each position
  std::vector<int> color;          // refined color per slot
  std::vector<bool> twin;          // twin[u*n+v]: swapping u,v is an automorphism
  std::vector<int> placed;         // slots in order
  std::vector<bool> used;
  std::vector<std::uint8_t> cur;   // upper-triangle bits, column by column
  std::vector<std::uint8_t> best;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), ids(graph.vertices()), n(graph.order()) {}

  void run() {
    color = refine_colors(g);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    class_at_pos.resize(n);
    for (int i = 0; i < n; ++i) class_at_pos[i] = color[order[i]];
    // Twins (equal neighborhoods off the pair) are interchangeable; trying
    // one representative per position is enough. This keeps edgeless graphs
    // and cliques linear instead of factorial.
    twin.assign(static_cast<size_t>(n) * n, false);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool tw = true;
        for (int w = 0; w < n && tw; ++w) {
          if (w == u || w == v) continue;
          if (g.adjacent(ids[u], ids[w]) != g.adjacent(ids[v], ids[w])) tw = false;
        }
        twin[u * n + v] = twin[v * n + u] = tw;
      }
    used.assign(n, false);
    cur.clear();
    rec(0, 0);
  }

  // cmp: -1 current prefix already strictly below best, 0 equal so far.
  void rec(int pos, int cmp) {
    if (pos == n) {
      if (!have_best || cmp < 0) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != class_at_pos[pos]) continue;
      bool shadowed = false;
      for (int u = 0; u < v && !shadowed; ++u)
        if (!used[u] && color[u] == color[v] && twin[u * n + v]) shadowed = true;
      if (shadowed) continue;  // an unused twin was (or will be) tried instead
      int base = static_cast<int>(cur.size());
      int c = cmp;
      bool prune = false;
      for (int i = 0; i < pos; ++i) {
        std::uint8_t b = g.adjacent(ids[placed[i]], ids[v]) ? 1 : 0;
        cur.push_back(b);
        if (have_best && c == 0) {
          std::uint8_t bb = best[base + i];
          if (b > bb) {
            prune = true;
            break;
          }
          if (b < bb) c = -1;
        }
      }
      if (!prune) {
        used[v] = true;
        placed.push_back(v);
        rec(pos + 1, c);
        placed.pop_back();
        used[v] = false;
      }
      cur.resize(base);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
  if (g.order() > cap)
    throw CapacityError("canonical_form: order " + std::to_string(g.order()) +
                        " above cap " + std::to_string(cap));
  CanonicalForm cf;
  cf.bytes.push_back(static_cast<std::uint8_t>(g.order()));
  if (g.order() == 0) return cf;
  CanonSearch s(g);
  s.run();
  // pack bits
  std::uint8_t acc = 0;
  int fill = 0;
  for (std::uint8_t b : s.best) {
    acc = static_cast<std::uint8_t>((acc << 1) | b);
    if (++fill == 8) {
      cf.bytes.push_back(acc);
      acc = 0;
      fill = 0;
    }
  }
  if (fill > 0) cf.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - fill)));
  return cf;
}

namespace {

struct EmbedSearch {
  const Graph& pat;
  const Graph& host;
  std::vector<VertexId> pat_order;
  std::vector<VertexId> image;
  std::vector<bool> host_used;

  EmbedSearch(const Graph& p, const Graph& h) : pat(p), host(h) {
    pat_order = pat.vertices();
    std::sort(pat_order.begin(), pat_order.end(), [&](VertexId a, VertexId b) {
      int da = pat.degree(a), db = pat.degree(b);
      if (da != db) return da > db;
      return a < b;
    });
    host_used.assign(host.order(), false);
  }

  bool rec(size_t k) {
    if (k == pat_order.size()) return true;
    VertexId u = pat_order[k];
    const auto& hids = host.vertices();
    for (int hs = 0; hs < host.order(); ++hs) {
      if (host_used[hs]) continue;
      VertexId cand = hids[hs];
      if (host.degree(cand) < pat.degree(u)) continue;
      bool ok = true;
      for (size_t i = 0; i < k; ++i) {
        if (pat.adjacent(u, pat_order[i]) != host.adjacent(cand, image[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      host_used[hs] = true;
      image.push_back(cand);
      if (rec(k + 1)) return true;
      image.pop_back();
      host_used[hs] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> find_induced_embedding(const Graph& pattern,
                                                                   const Graph& host) {
  if (pattern.order() > host.order()) return std::nullopt;
  EmbedSearch s(pattern, host);
  if (!s.rec(0)) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (size_t i = 0; i < s.pat_order.size(); ++i) out[s.pat_order[i]] = s.image[i];
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return find_induced_embedding(a, b).has_value();
}

}  // namespace vmlab
