#include "vmlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace vmlab {

bool at_least_half(Distance lhs, Distance rhs) {
  if (!rhs.is_finite()) return !lhs.is_finite();
  if (!lhs.is_finite()) return true;
  // integer lhs >= ceil(rhs/2)  <=>  2*lhs >= rhs
  return 2 * lhs.value() >= rhs.value();
}

namespace {

std::vector<VertexId> iota_ids(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  std::vector<VertexId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return from_edges(iota_ids(n), edges);
}

Graph Graph::from_edges(std::vector<VertexId> ids,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GraphBuilder b(std::move(ids));
  for (const auto& [u, v] : edges) b.set_edge(u, v, true);
  return b.build();
}

long Graph::edge_count() const {
  long twice = 0;
  for (const auto& row : rows_)
    for (std::uint64_t w : row) twice += std::popcount(w);
  return twice / 2;
}

int Graph::find_slot(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return -1;
  return static_cast<int>(it - ids_.begin());
}

int Graph::slot_of(VertexId v) const {
  int s = find_slot(v);
  if (s < 0) throw DomainError("unknown vertex id " + std::to_string(v));
  return s;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return bit(slot_of(u), slot_of(v)); }

int Graph::degree(VertexId v) const {
  int s = slot_of(v);
  int d = 0;
  for (std::uint64_t w : rows_[s]) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(VertexId v) const {
  int s = slot_of(v);
  VertexSet out;
  for (int t = 0; t < order(); ++t)
    if (bit(s, t)) out.insert(ids_[t]);
  return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out;
  for (VertexId v : s) {
    out.insert(v);
    VertexSet nb = neighbors(v);
    out.insert(nb.begin(), nb.end());
  }
  return out;
}

bool Graph::is_independent(const VertexSet& s) const {
  std::vector<int> slots;
  slots.reserve(s.size());
  for (VertexId v : s) slots.push_back(slot_of(v));
  for (size_t i = 0; i < slots.size(); ++i)
    for (size_t j = i + 1; j < slots.size(); ++j)
      if (bit(slots[i], slots[j])) return false;
  return true;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> old_slots;
  old_slots.reserve(keep.size());
  for (VertexId v : keep) old_slots.push_back(slot_of(v));  // keep is ordered
  GraphBuilder b(std::vector<VertexId>(keep.begin(), keep.end()));
  for (size_t i = 0; i < old_slots.size(); ++i)
    for (size_t j = i + 1; j < old_slots.size(); ++j)
      if (bit(old_slots[i], old_slots[j]))
        b.set_edge(ids_[old_slots[i]], ids_[old_slots[j]], true);
  return b.build();
}

Graph Graph::without(const VertexSet& drop) const {
  for (VertexId v : drop) slot_of(v);  // validate
  VertexSet keep;
  for (VertexId v : ids_)
    if (!drop.count(v)) keep.insert(v);
  return induced(keep);
}

Distance Graph::distance(VertexId u, VertexId v) const {
  int su = slot_of(u), sv = slot_of(v);
  if (su == sv) return Distance::finite(0);
  std::vector<int> dist(order(), -1);
  dist[su] = 0;
  std::deque<int> q{su};
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int t = 0; t < order(); ++t) {
      if (bit(s, t) && dist[t] < 0) {
        dist[t] = dist[s] + 1;
        if (t == sv) return Distance::finite(dist[t]);
        q.push_back(t);
      }
    }
  }
  return Distance::infinite();
}

std::vector<std::vector<Distance>> Graph::all_distances() const {
  int n = order();
  std::vector<std::vector<Distance>> out(n, std::vector<Distance>(n));
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(n, -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int t = 0; t < n; ++t) {
        if (bit(s, t) && dist[t] < 0) {
          dist[t] = dist[s] + 1;
          q.push_back(t);
        }
      }
    }
    for (int t = 0; t < n; ++t)
      out[src][t] = dist[t] < 0 ? Distance::infinite() : Distance::finite(dist[t]);
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : GraphBuilder(iota_ids(n)) {}

GraphBuilder::GraphBuilder(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i + 1 < ids.size(); ++i)
    if (ids[i] == ids[i + 1])
      throw DomainError("duplicate vertex id " + std::to_string(ids[i]));
  for (VertexId v : ids)
    if (v < 0) throw DomainError("negative vertex id");
  g_.ids_ = std::move(ids);
  g_.words_ = (static_cast<int>(g_.ids_.size()) + 63) / 64;
  g_.rows_.assign(g_.ids_.size(), std::vector<std::uint64_t>(g_.words_, 0));
}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

int GraphBuilder::slot_checked(VertexId v) const { return g_.slot_of(v); }

void GraphBuilder::set_edge(VertexId u, VertexId v, bool present) {
  int su = slot_checked(u), sv = slot_checked(v);
  if (su == sv) throw DomainError("self loop at vertex " + std::to_string(u));
  auto put = [&](int a, int b) {
    std::uint64_t m = 1ULL << (b & 63);
    if (present)
      g_.rows_[a][b >> 6] |= m;
    else
      g_.rows_[a][b >> 6] &= ~m;
  };
  put(su, sv);
  put(sv, su);
}

void GraphBuilder::toggle_edge(VertexId u, VertexId v) {
  int su = slot_checked(u), sv = slot_checked(v);
  if (su == sv) throw DomainError("self loop at vertex " + std::to_string(u));
  g_.rows_[su][sv >> 6] ^= 1ULL << (sv & 63);
  g_.rows_[sv][su >> 6] ^= 1ULL << (su & 63);
}

std::vector<std::uint64_t> GraphBuilder::mask_of(const VertexSet& s) const {
  std::vector<std::uint64_t> mask(g_.words_, 0);
  for (VertexId v : s) {
    int sl = slot_checked(v);
    mask[sl >> 6] |= 1ULL << (sl & 63);
  }
  return mask;
}

void GraphBuilder::complement_within(const VertexSet& s) {
  auto mask = mask_of(s);
  for (VertexId v : s) {
    int sl = g_.slot_of(v);
    auto& row = g_.rows_[sl];
    for (int w = 0; w < g_.words_; ++w) row[w] ^= mask[w];
    row[sl >> 6] &= ~(1ULL << (sl & 63));  // no loops
  }
}

void GraphBuilder::toggle_between(const VertexSet& s, const VertexSet& t) {
  for (VertexId v : s)
    if (t.count(v)) throw DomainError("toggle_between with overlapping sets");
  auto ms = mask_of(s), mt = mask_of(t);
  for (VertexId v : s) {
    auto& row = g_.rows_[g_.slot_of(v)];
    for (int w = 0; w < g_.words_; ++w) row[w] ^= mt[w];
  }
  for (VertexId v : t) {
    auto& row = g_.rows_[g_.slot_of(v)];
    for (int w = 0; w < g_.words_; ++w) row[w] ^= ms[w];
  }
}

void GraphBuilder::clear_within(const VertexSet& s) {
  auto mask = mask_of(s);
  for (VertexId v : s) {
    auto& row = g_.rows_[g_.slot_of(v)];
    for (int w = 0; w < g_.words_; ++w) row[w] &= ~mask[w];
  }
}

Graph GraphBuilder::build() const { return g_; }

}  // namespace vmlab
