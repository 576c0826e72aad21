#include "vmlab/vminor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vmlab {

Graph local_complement(const Graph& g, VertexId v) {
  VertexSet nb = g.neighbors(v);
  GraphBuilder b(g);
  b.complement_within(nb);
  return b.build();
}

Graph pivot(const Graph& g, VertexId u, VertexId v) {
  if (!g.adjacent(u, v))
    throw PreconditionError("pivot: " + std::to_string(u) + std::to_string(v) +
                            " is not an edge");
  return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph local_complement_set(const Graph& g, const VertexSet& i) {
  for (VertexId v : i) g.slot_of(v);  // validate ids first
  if (!g.is_independent(i))
    throw FaultyComplementation("local complementation of a non-independent set");
  Graph cur = g;
  for (VertexId v : i) cur = local_complement(cur, v);
  return cur;
}

Graph apply_witness(const Graph& g, const VMinorWitness& w) {
  Graph cur = g;
  for (size_t j = 0; j < w.steps.size(); ++j) {
    try {
      cur = local_complement_set(cur, w.steps[j]);
    } catch (const FaultyComplementation&) {
      throw FaultyComplementation(
          "witness step " + std::to_string(j) + " is not independent at its step",
          static_cast<int>(j));
    }
  }
  return cur.without(w.deletions);
}

namespace {

void validate_subdivision(const Graph& g, const SubdivisionMap& m) {
  std::set<std::pair<VertexId, VertexId>> path_edges;
  VertexSet endpoints, internals;
  for (const auto& [edge, path] : m.paths) {
    if (path.size() < 2) throw ValidationError("subdivision path shorter than an edge");
    if (path.front() != edge.first || path.back() != edge.second)
      throw ValidationError("subdivision path does not join its edge's endpoints");
    if (edge.first >= edge.second)
      throw ValidationError("subdivision map edges must be given as u < v");
    endpoints.insert(edge.first);
    endpoints.insert(edge.second);
    for (size_t t = 0; t + 1 < path.size(); ++t) {
      if (!g.has_vertex(path[t]) || !g.adjacent(path[t], path[t + 1]))
        throw ValidationError("subdivision path edge missing from the graph");
      auto e = std::minmax(path[t], path[t + 1]);
      if (!path_edges.insert(e).second)
        throw ValidationError("subdivision paths share an edge");
    }
    for (size_t t = 1; t + 1 < path.size(); ++t) {
      if (!internals.insert(path[t]).second)
        throw ValidationError("subdivision paths share an internal vertex");
    }
  }
  for (VertexId v : internals)
    if (endpoints.count(v))
      throw ValidationError("subdivision vertex also appears as an endpoint");
  if (static_cast<long>(path_edges.size()) != g.edge_count())
    throw ValidationError("graph has edges outside the subdivision paths");
  // Vertices outside every path must be isolated vertices of the original
  // graph; they ride through unchanged.
  for (VertexId v : g.vertices())
    if (!endpoints.count(v) && !internals.count(v) && g.degree(v) != 0)
      throw ValidationError("graph has vertices outside the subdivision paths");
}

}  // namespace

VMinorWitness unsubdivide(const Graph& g, const SubdivisionMap& m) {
  validate_subdivision(g, m);
  size_t rmax = 0;
  for (const auto& [edge, path] : m.paths) rmax = std::max(rmax, path.size() - 2);

  VMinorWitness w;
  // Work on internal sequences only; each round keeps the even positions.
  std::vector<std::vector<VertexId>> pending;
  for (const auto& [edge, path] : m.paths) {
    if (path.size() > 2)
      pending.emplace_back(path.begin() + 1, path.end() - 1);
    for (size_t t = 1; t + 1 < path.size(); ++t) w.deletions.insert(path[t]);
  }
  while (!pending.empty()) {
    VertexSet round;
    std::vector<std::vector<VertexId>> next;
    for (const auto& internal : pending) {
      std::vector<VertexId> kept;
      for (size_t t = 0; t < internal.size(); ++t) {
        if (t % 2 == 0)
          round.insert(internal[t]);  // odd positions in 1-based indexing
        else
          kept.push_back(internal[t]);
      }
      if (!kept.empty()) next.push_back(std::move(kept));
    }
    w.steps.push_back(std::move(round));
    pending = std::move(next);
  }

  int expected = 0;
  while ((1u << expected) < rmax + 1) ++expected;
  if (w.depth() != expected)
    throw InternalInvariantError("unsubdivide depth " + std::to_string(w.depth()) +
                                 " differs from ceil(log2(r+1)) = " + std::to_string(expected));
  return w;
}

std::vector<VertexId> reduce_flip_by_pivots(const Graph& g, const Flip& f, const VertexSet& i) {
  if (!g.is_independent(i))
    throw PreconditionError("reduce_flip_by_pivots: i must be independent in g");
  int k = f.class_count();
  std::vector<VertexId> rep(k + 1, -1);  // class -> its unique element of i
  for (VertexId v : i) {
    int c = f.class_of(v);
    if (rep[c] != -1)
      throw PreconditionError("reduce_flip_by_pivots: class " + std::to_string(c) +
                              " holds two elements of i");
    rep[c] = v;
  }
  for (int c = 1; c <= k; ++c)
    if (rep[c] == -1)
      throw PreconditionError("reduce_flip_by_pivots: class " + std::to_string(c) +
                              " has no element of i");

  // Working copy of tau; eliminate active classes by the tau updates.
  std::vector<std::vector<std::uint8_t>> t(k + 1, std::vector<std::uint8_t>(k + 1, 0));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) t[a][b] = f.tau(a, b) ? 1 : 0;

  auto active = [&](int a) {
    for (int j = 1; j <= k; ++j)
      if (t[a][j]) return true;
    return false;
  };

  std::vector<VertexId> seq;
  for (;;) {
    int self = -1, any = -1;
    for (int a = 1; a <= k && self == -1; ++a) {
      if (!active(a)) continue;
      if (any == -1) any = a;
      if (t[a][a]) self = a;
    }
    if (any == -1) break;
    if (self != -1) {
      int a = self;
      seq.push_back(rep[a]);
      std::vector<std::vector<std::uint8_t>> nt = t;
      for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) nt[x][y] = t[x][y] ^ (t[x][a] & t[y][a]);
      t = std::move(nt);
    } else {
      int a = any, b = -1;
      for (int j = 1; j <= k && b == -1; ++j)
        if (j != a && t[a][j]) b = j;
      seq.push_back(rep[a]);
      seq.push_back(rep[b]);
      seq.push_back(rep[a]);
      std::vector<std::vector<std::uint8_t>> nt = t;
      for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
          nt[x][y] = t[x][y] ^ (t[x][a] & t[y][b]) ^ (t[x][b] & t[y][a]);
      t = std::move(nt);
    }
  }

  if (static_cast<int>(seq.size()) > (3 * k) / 2)
    throw InternalInvariantError("reduce_flip_by_pivots: sequence longer than 3k/2");
  std::map<VertexId, int> uses;
  for (VertexId z : seq)
    if (++uses[z] > 2)
      throw InternalInvariantError("reduce_flip_by_pivots: element used more than twice");
  return seq;
}

std::string witness_to_text(const VMinorWitness& w) {
  std::ostringstream out;
  out << "steps " << w.steps.size() << '\n';
  for (const auto& s : w.steps) {
    out << s.size();
    for (VertexId v : s) out << ' ' << v;
    out << '\n';
  }
  out << "delete " << w.deletions.size();
  for (VertexId v : w.deletions) out << ' ' << v;
  out << '\n';
  return out.str();
}

VMinorWitness witness_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  long c = 0;
  if (!(in >> kw >> c) || kw != "steps")
    throw ValidationError("witness: expected 'steps c' header");
  VMinorWitness w;
  for (long j = 0; j < c; ++j) {
    long cnt = 0;
    if (!(in >> cnt)) throw ValidationError("witness: expected step size");
    VertexSet s;
    for (long x = 0; x < cnt; ++x) {
      VertexId v;
      if (!(in >> v)) throw ValidationError("witness: truncated step");
      s.insert(v);
    }
    w.steps.push_back(std::move(s));
  }
  long cnt = 0;
  if (!(in >> kw >> cnt) || kw != "delete")
    throw ValidationError("witness: expected 'delete cnt' trailer");
  for (long x = 0; x < cnt; ++x) {
    VertexId v;
    if (!(in >> v)) throw ValidationError("witness: truncated deletion set");
    w.deletions.insert(v);
  }
  return w;
}

}  // namespace vmlab
