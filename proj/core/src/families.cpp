#include "vmlab/families.hpp"

#include <algorithm>
#include <sstream>

namespace vmlab {

VertexId LabeledGraph::by_role(const std::string& role) const {
  for (const auto& [id, r] : roles)
    if (r == role) return id;
  throw DomainError("no vertex with role " + role);
}

namespace {

std::string subset_role(unsigned mask) {
  std::string s = "b{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace

LabeledGraph half_graph(int n) {
  if (n < 1) throw DomainError("half_graph needs n >= 1");
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) edges.emplace_back(i - 1, n + j - 1);
  out.graph = Graph::from_edges(2 * n, edges);
  for (int i = 1; i <= n; ++i) {
    out.roles[i - 1] = "a" + std::to_string(i);
    out.roles[n + i - 1] = "b" + std::to_string(i);
  }
  return out;
}

LabeledGraph permutation_graph(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  if (n < 1) throw DomainError("permutation_graph needs n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw DomainError("sigma is not a bijection on [n]");
    seen[v] = true;
  }
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> ids;
  for (int i = 1; i <= n; ++i) {
    ids.push_back(i);
    out.roles[i] = "v" + std::to_string(i);
    for (int j = i + 1; j <= n; ++j)
      if (sigma[i - 1] > sigma[j - 1]) edges.emplace_back(i, j);
  }
  out.graph = Graph::from_edges(ids, edges);
  return out;
}

LabeledGraph comparability_grid(int n) {
  if (n < 1) throw DomainError("comparability_grid needs n >= 1");
  auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      out.roles[id(i, j)] = "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (int i2 = 1; i2 <= n; ++i2)
        for (int j2 = 1; j2 <= n; ++j2) {
          if (id(i2, j2) <= id(i, j)) continue;
          if (i == i2 || j == j2 || ((i < j) == (i2 < j2)))
            edges.emplace_back(id(i, j), id(i2, j2));
        }
    }
  out.graph = Graph::from_edges(n * n, edges);
  return out;
}

LabeledGraph crossing(CrossingKind kind, int r, int n,
                      const std::optional<std::vector<std::vector<std::uint8_t>>>& flip_tau) {
  if (r < 1 || n < 1) throw DomainError("crossing needs r >= 1 and n >= 1");
  // p(i,j,0) = a_i and p(i,j,r+1) = b_j are shared; layers 1..r are private
  // to their path.
  auto pid = [&](int i, int j, int k) -> VertexId {
    if (k == 0) return i - 1;
    if (k == r + 1) return n + j - 1;
    return 2 * n + (k - 1) * n * n + (i - 1) * n + (j - 1);
  };
  LabeledGraph out;
  for (int i = 1; i <= n; ++i) out.roles[i - 1] = "a" + std::to_string(i);
  for (int j = 1; j <= n; ++j) out.roles[n + j - 1] = "b" + std::to_string(j);
  for (int k = 1; k <= r; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        out.roles[pid(i, j, k)] = "p(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")";

  GraphBuilder b(2 * n + r * n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= r; ++k) b.set_edge(pid(i, j, k), pid(i, j, k + 1), true);

  if (kind == CrossingKind::Clique) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int j2 = j + 1; j2 <= n; ++j2) b.set_edge(pid(i, j, 1), pid(i, j2, 1), true);
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i)
        for (int i2 = i + 1; i2 <= n; ++i2) b.set_edge(pid(i, j, r), pid(i2, j, r), true);
  } else if (kind == CrossingKind::Half) {
    for (int i = 1; i <= n; ++i)
      for (int i2 = i; i2 <= n; ++i2)
        for (int j = 1; j <= n; ++j) b.set_edge(i - 1, pid(i2, j, 1), true);
    for (int j = 1; j <= n; ++j)
      for (int j2 = j; j2 <= n; ++j2)
        for (int i = 1; i <= n; ++i) b.set_edge(n + j - 1, pid(i, j2, r), true);
  }
  out.graph = b.build();

  if (kind == CrossingKind::Star) {
    if (out.graph.order() != 2 * n + r * n * n ||
        out.graph.edge_count() != static_cast<long>(r + 1) * n * n)
      throw InternalInvariantError("star crossing has wrong vertex or edge count");
  }

  if (flip_tau) {
    // Flip-parts are the layers {p(i,j,k) : i,j} for fixed k.
    if (static_cast<int>(flip_tau->size()) != r + 2)
      throw DomainError("crossing flip table must be (r+2) x (r+2)");
    std::map<VertexId, int> iota;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 0; k <= r + 1; ++k) iota[pid(i, j, k)] = k + 1;
    out.graph = apply_flip(out.graph, Flip(r + 2, std::move(iota), *flip_tau));
  }
  return out;
}

LabeledGraph ordered_matching_graph(const Matching& m) {
  int n = m.size();
  if (n < 1) throw DomainError("ordered_matching_graph needs a nonempty matching");
  std::vector<bool> fst(n + 1, false), snd(n + 1, false);
  for (const auto& [k, l] : m.pairs) {
    if (k < 1 || k > n || l < 1 || l > n || fst[k] || snd[l])
      throw DomainError("not a perfect matching of [n] x [n]");
    fst[k] = snd[l] = true;
  }
  auto pairs = m.pairs;
  std::sort(pairs.begin(), pairs.end());

  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= n; ++i) {
    out.roles[i - 1] = "a" + std::to_string(i);
    out.roles[n + i - 1] = "b" + std::to_string(i);
  }
  for (int t = 0; t < n; ++t) {
    auto [k, l] = pairs[t];
    VertexId mv = 2 * n + t;
    out.roles[mv] = "m(" + std::to_string(k) + "," + std::to_string(l) + ")";
    for (int i = 1; i <= k; ++i) edges.emplace_back(i - 1, mv);
    for (int j = 1; j <= l; ++j) edges.emplace_back(n + j - 1, mv);
  }
  out.graph = Graph::from_edges(3 * n, edges);
  return out;
}

LabeledGraph power_split_interval(int n) {
  if (n < 2) throw DomainError("power_split_interval needs n >= 2");
  // Stable points in order a_1, a_1', ..., a_n, a_n' then b_J, subsets in
  // reverse lexicographic order (descending as bit masks, so b over the full
  // set comes first and b over the empty set last).
  int points = 2 * n + (1 << n);
  LabeledGraph out;
  std::vector<int> b_pos(1u << n, 0);  // mask -> position (1-based)
  {
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), std::greater<>());
    for (int t = 0; t < static_cast<int>(masks.size()); ++t) b_pos[masks[t]] = 2 * n + t + 1;
  }
  for (int i = 1; i <= n; ++i) {
    out.roles[2 * i - 2] = "a" + std::to_string(i);
    out.roles[2 * i - 1] = "a" + std::to_string(i) + "'";
  }
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    out.roles[b_pos[mask] - 1] = subset_role(mask);

  // Intervals: [a_1, a_n'] and, for each i and J containing i, [a_i, b_J].
  struct Iv {
    int lo, hi;
    std::string role;
  };
  std::vector<Iv> ivs;
  ivs.push_back({1, 2 * n, "I(a1,an')"});
  for (int i = 1; i <= n; ++i)
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (mask & (1u << (i - 1)))
        ivs.push_back({2 * i - 1, b_pos[mask],
                       "I(a" + std::to_string(i) + "," + subset_role(mask) + ")"});

  GraphBuilder b(points + static_cast<int>(ivs.size()));
  for (int t = 0; t < static_cast<int>(ivs.size()); ++t) {
    VertexId iv = points + t;
    out.roles[iv] = ivs[t].role;
    for (int p = ivs[t].lo; p <= ivs[t].hi; ++p) b.set_edge(p - 1, iv, true);
    for (int u = 0; u < t; ++u) b.set_edge(points + u, iv, true);  // clique side
  }
  out.graph = b.build();
  return out;
}

std::pair<Graph, SubdivisionMap> subdivision(const Graph& h, int r) {
  if (r < 0) throw DomainError("subdivision needs r >= 0");
  VertexId fresh = 0;
  for (VertexId v : h.vertices()) fresh = std::max(fresh, v + 1);
  SubdivisionMap map;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> ids = h.vertices();
  const auto& hv = h.vertices();
  for (size_t i = 0; i < hv.size(); ++i)
    for (size_t j = i + 1; j < hv.size(); ++j) {
      if (!h.adjacent(hv[i], hv[j])) continue;
      std::vector<VertexId> path{hv[i]};
      for (int t = 0; t < r; ++t) {
        path.push_back(fresh);
        ids.push_back(fresh);
        ++fresh;
      }
      path.push_back(hv[j]);
      for (size_t t = 0; t + 1 < path.size(); ++t) edges.emplace_back(path[t], path[t + 1]);
      map.paths[{hv[i], hv[j]}] = std::move(path);
    }
  return {Graph::from_edges(ids, edges), std::move(map)};
}

namespace {

void validate_interval_model(const IntervalModel& model) {
  VertexSet ids;
  for (const auto& p : model.points)
    if (!ids.insert(p.id).second) throw ValidationError("interval model: duplicate id");
  for (const auto& iv : model.intervals) {
    if (!ids.insert(iv.id).second) throw ValidationError("interval model: duplicate id");
    if (iv.hi < iv.lo) throw ValidationError("interval model: hi < lo");
  }
  for (size_t i = 0; i < model.points.size(); ++i)
    for (size_t j = i + 1; j < model.points.size(); ++j)
      if (model.points[i].pos == model.points[j].pos)
        throw ValidationError("interval model: stable points must sit at distinct positions");
  if (model.intervals.size() >= 2) {
    Rational max_lo = model.intervals[0].lo, min_hi = model.intervals[0].hi;
    for (const auto& iv : model.intervals) {
      max_lo = std::max(max_lo, iv.lo);
      min_hi = std::min(min_hi, iv.hi);
    }
    if (min_hi < max_lo)
      throw ValidationError("interval model: clique intervals must pairwise intersect");
  }
}

}  // namespace

Graph interval_model_graph(const IntervalModel& model) {
  validate_interval_model(model);
  std::vector<VertexId> ids;
  for (const auto& p : model.points) ids.push_back(p.id);
  for (const auto& iv : model.intervals) ids.push_back(iv.id);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& p : model.points)
    for (const auto& iv : model.intervals)
      if (iv.lo <= p.pos && p.pos <= iv.hi) edges.emplace_back(p.id, iv.id);
  for (size_t i = 0; i < model.intervals.size(); ++i)
    for (size_t j = i + 1; j < model.intervals.size(); ++j) {
      const auto& a = model.intervals[i];
      const auto& b = model.intervals[j];
      if (std::max(a.lo, b.lo) <= std::min(a.hi, b.hi)) edges.emplace_back(a.id, b.id);
    }
  return Graph::from_edges(ids, edges);
}

OrderedMatchingEmbedding split_interval_to_ordered_matching(const IntervalModel& model) {
  validate_interval_model(model);

  struct Pt {
    Rational pos;
    int orig = -1;  // index into model.points, -1 for augmentation points
  };
  struct Iv {
    Rational lo, hi;
    int orig = -1;  // index into model.intervals, -1 for augmentation intervals
    int left_tok = -1, right_tok = -1;  // indices into pts
  };
  std::vector<Pt> pts;
  std::vector<Iv> ivs;
  for (size_t t = 0; t < model.points.size(); ++t)
    pts.push_back({model.points[t].pos, static_cast<int>(t)});
  for (size_t t = 0; t < model.intervals.size(); ++t)
    ivs.push_back({model.intervals[t].lo, model.intervals[t].hi, static_cast<int>(t)});

  // Fresh material must never change an original point-interval incidence.
  // Extensions of original intervals therefore step only into the adjacent
  // point-free gap (half of it, exactly, in rationals); only brand-new
  // intervals may span the whole line.
  auto coordinate_min = [&]() {
    Rational m = pts.empty() ? (ivs.empty() ? Rational(0) : ivs[0].lo) : pts[0].pos;
    for (const auto& p : pts) m = std::min(m, p.pos);
    for (const auto& iv : ivs) m = std::min(m, iv.lo);
    return m;
  };
  auto coordinate_max = [&]() {
    Rational m = pts.empty() ? (ivs.empty() ? Rational(0) : ivs[0].hi) : pts[0].pos;
    for (const auto& p : pts) m = std::max(m, p.pos);
    for (const auto& iv : ivs) m = std::max(m, iv.hi);
    return m;
  };
  auto fresh_point_at = [&](const Rational& pos) {
    pts.push_back({pos, -1});
    return static_cast<int>(pts.size()) - 1;
  };
  // A position in the point-free gap just left (right) of x.
  auto gap_left_of = [&](const Rational& x) {
    Rational best = x - Rational(1, 2);
    bool found = false;
    for (const auto& p : pts)
      if (p.pos < x && (!found || best < p.pos)) {
        best = p.pos;
        found = true;
      }
    return found ? (best + x) / 2 : x - Rational(1, 2);
  };
  auto gap_right_of = [&](const Rational& x) {
    Rational best = x + Rational(1, 2);
    bool found = false;
    for (const auto& p : pts)
      if (x < p.pos && (!found || p.pos < best)) {
        best = p.pos;
        found = true;
      }
    return found ? (x + best) / 2 : x + Rational(1, 2);
  };

  if (ivs.empty())
    ivs.push_back({coordinate_max() + 1, coordinate_max() + 1, -1});  // holds no original point

  // Distinguished point a_1 in the common intersection of all intervals.
  Rational common_lo = ivs[0].lo, common_hi = ivs[0].hi;
  for (const auto& iv : ivs) {
    common_lo = std::max(common_lo, iv.lo);
    common_hi = std::min(common_hi, iv.hi);
  }
  int a1 = -1;
  for (size_t t = 0; t < pts.size(); ++t)
    if (common_lo <= pts[t].pos && pts[t].pos <= common_hi)
      if (a1 < 0 || pts[t].pos < pts[a1].pos) a1 = static_cast<int>(t);
  if (a1 < 0) {
    a1 = static_cast<int>(pts.size());
    pts.push_back({common_lo, -1});
  }
  const Rational c = pts[a1].pos;

  // Extreme incidences for the existing intervals, in (lo, hi) lex order.
  std::vector<int> order(ivs.size());
  for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (ivs[x].lo != ivs[y].lo) return ivs[x].lo < ivs[y].lo;
    if (ivs[x].hi != ivs[y].hi) return ivs[x].hi < ivs[y].hi;
    return x < y;
  });
  std::set<int> claimed;
  auto leftmost_in = [&](const Iv& iv) {
    int best = -1;
    for (size_t t = 0; t < pts.size(); ++t)
      if (iv.lo <= pts[t].pos && pts[t].pos <= iv.hi)
        if (best < 0 || pts[t].pos < pts[best].pos) best = static_cast<int>(t);
    return best;
  };
  auto rightmost_in = [&](const Iv& iv) {
    int best = -1;
    for (size_t t = 0; t < pts.size(); ++t)
      if (iv.lo <= pts[t].pos && pts[t].pos <= iv.hi)
        if (best < 0 || pts[best].pos < pts[t].pos) best = static_cast<int>(t);
    return best;
  };
  auto claim = [&](int pt) { claimed.insert(pt); };
  auto is_claimed = [&](int pt) { return claimed.count(pt) != 0; };

  for (int t : order) {
    Iv& iv = ivs[t];
    int lm = leftmost_in(iv);
    if (lm < 0 || is_claimed(lm)) {
      // Slightly extend into the gap left of the interval: the fresh token
      // is the only point gained, so original incidences are untouched.
      int fresh = fresh_point_at(gap_left_of(iv.lo));
      iv.lo = pts[fresh].pos;
      lm = fresh;
    }
    claim(lm);
    iv.left_tok = lm;
    int rm = rightmost_in(iv);
    // The right token must lie strictly right of a_1 and be unclaimed.
    if (rm < 0 || is_claimed(rm) || !(c < pts[rm].pos)) {
      int fresh = fresh_point_at(gap_right_of(iv.hi));
      iv.hi = pts[fresh].pos;
      rm = fresh;
    }
    claim(rm);
    iv.right_tok = rm;
  }

  // Every remaining point becomes the extreme of one fresh interval. These
  // intervals are new vertices, so they may cover anything, as long as they
  // reach a_1.
  std::vector<int> rest;
  for (size_t t = 0; t < pts.size(); ++t)
    if (!is_claimed(static_cast<int>(t))) rest.push_back(static_cast<int>(t));
  std::sort(rest.begin(), rest.end(),
            [&](int x, int y) { return pts[x].pos < pts[y].pos; });
  for (int p : rest) {
    if (pts[p].pos <= c) {
      int fresh = fresh_point_at(coordinate_max() + Rational(1, 2));
      ivs.push_back({pts[p].pos, pts[fresh].pos, -1, p, fresh});
      claim(p);
      claim(fresh);
    } else {
      int fresh = fresh_point_at(coordinate_min() - Rational(1, 2));
      ivs.push_back({pts[fresh].pos, pts[p].pos, -1, fresh, p});
      claim(p);
      claim(fresh);
    }
  }

  // Label left tokens a_1 (rightmost) .. a_m (leftmost) and right tokens
  // b_1 (leftmost) .. b_m (rightmost); read off the matching.
  int msize = static_cast<int>(ivs.size());
  std::vector<int> lefts, rights;
  for (const auto& iv : ivs) {
    lefts.push_back(iv.left_tok);
    rights.push_back(iv.right_tok);
  }
  std::sort(lefts.begin(), lefts.end(),
            [&](int x, int y) { return pts[y].pos < pts[x].pos; });
  std::sort(rights.begin(), rights.end(),
            [&](int x, int y) { return pts[x].pos < pts[y].pos; });
  std::vector<int> a_index(pts.size(), 0), b_index(pts.size(), 0);
  for (int t = 0; t < msize; ++t) a_index[lefts[t]] = t + 1;
  for (int t = 0; t < msize; ++t) b_index[rights[t]] = t + 1;

  OrderedMatchingEmbedding out;
  for (const auto& iv : ivs)
    out.m.pairs.emplace_back(a_index[iv.left_tok], b_index[iv.right_tok]);
  out.om = ordered_matching_graph(out.m);
  out.a1 = out.om.by_role("a1");

  // Original vertices into the ordered matching graph.
  auto om_pair_id = [&](int k, int l) {
    return out.om.by_role("m(" + std::to_string(k) + "," + std::to_string(l) + ")");
  };
  for (size_t t = 0; t < pts.size(); ++t) {
    if (pts[t].orig < 0) continue;
    VertexId model_id = model.points[pts[t].orig].id;
    if (a_index[t] > 0)
      out.embedding[model_id] = out.om.by_role("a" + std::to_string(a_index[t]));
    else
      out.embedding[model_id] = out.om.by_role("b" + std::to_string(b_index[t]));
  }
  for (const auto& iv : ivs) {
    if (iv.orig < 0) continue;
    out.embedding[model.intervals[iv.orig].id] =
        om_pair_id(a_index[iv.left_tok], b_index[iv.right_tok]);
  }
  return out;
}

}  // namespace vmlab
