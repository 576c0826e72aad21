#include "vmlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "vmlab/canonical.hpp"
#include "vmlab/commute.hpp"
#include "vmlab/families.hpp"
#include "vmlab/graph_io.hpp"
#include "vmlab/logic.hpp"
#include "vmlab/search.hpp"
#include "vmlab/structures.hpp"
#include "vmlab/vminor.hpp"

namespace vmlab {

std::string default_data_dir() {
#ifdef VMLAB_DATA_DIR
  return VMLAB_DATA_DIR;
#else
  return "data";
#endif
}

Graph random_graph(Rng& rng, int n, int edge_pct) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.percent(edge_pct)) b.set_edge(i, j, true);
  return b.build();
}

Flip random_flip(Rng& rng, const Graph& g, int max_k) {
  int k = rng.uniform(1, max_k);
  std::map<VertexId, int> iota;
  for (VertexId v : g.vertices()) iota[v] = rng.uniform(1, k);
  std::vector<std::vector<std::uint8_t>> tau(k, std::vector<std::uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) tau[i][j] = tau[j][i] = rng.coin() ? 1 : 0;
  return Flip(k, std::move(iota), std::move(tau));
}

VertexSet random_independent_set(Rng& rng, const Graph& g) {
  std::vector<VertexId> order = g.vertices();
  rng.shuffle(order);
  VertexSet out;
  for (VertexId v : order) {
    if (!rng.percent(60)) continue;
    bool ok = true;
    for (VertexId u : out)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.insert(v);
  }
  return out;
}

VertexSet random_common_independent_set(Rng& rng, const Graph& g1, const Graph& g2) {
  std::vector<VertexId> order = g1.vertices();
  rng.shuffle(order);
  VertexSet out;
  for (VertexId v : order) {
    if (!rng.percent(60)) continue;
    bool ok = true;
    for (VertexId u : out)
      if (g1.adjacent(u, v) || g2.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.insert(v);
  }
  return out;
}

namespace {

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string seq_str(const std::vector<VertexId>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

struct SuiteCtx {
  VerificationReport rep;
  // name -> (claimed, observed) of the tightest instance seen
  std::map<std::string, std::pair<long, long>> bounds;

  void fail(int trial, const std::string& msg,
            std::map<std::string, std::string> instance = {}) {
    rep.failures.push_back({trial, msg, std::move(instance)});
  }

  // Records the tightest instance and reports a failure when exceeded;
  // returns true in that case so the caller may attach the instance.
  bool bound(const std::string& name, long claimed, long observed, int trial = -1,
             std::map<std::string, std::string> instance = {}) {
    auto [it, fresh] = bounds.emplace(name, std::make_pair(claimed, observed));
    if (!fresh) {
      long margin = it->second.second - it->second.first;
      if (observed - claimed > margin ||
          (observed - claimed == margin && observed > it->second.second))
        it->second = {claimed, observed};
    }
    if (observed <= claimed) return false;
    fail(trial,
         "bound " + name + " exceeded: observed " + std::to_string(observed) +
             " > claimed " + std::to_string(claimed),
         std::move(instance));
    return true;
  }

  void finish() {
    for (const auto& [name, cb] : bounds) rep.bounds.push_back({name, cb.first, cb.second});
  }
};

Graph remove_inner_edges(const Graph& g, const VertexSet& s) {
  GraphBuilder b(g);
  b.clear_within(s);
  return b.build();
}

// ---------------------------------------------------------------------------

void suite_flip_involution(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 1000 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 4);
    Graph once = apply_flip(g, f);
    if (once.vertices() != g.vertices()) {
      c.fail(t, "apply_flip changed the vertex set",
             {{"graph", graph_to_text(g)}, {"flip", flip_to_text(f)}});
      continue;
    }
    if (!(apply_flip(once, f) == g))
      c.fail(t, "(g (+) f) (+) f differs from g",
             {{"graph", graph_to_text(g)}, {"flip", flip_to_text(f)}});
  }
}

void suite_lc_involution(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 1000 : o.trials;
  int ordering_trials = std::max(1, trials / 5);
  c.rep.trials = trials + ordering_trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.pick<int>({20, 50, 80}));
    VertexId v = rng.pick(g.vertices());
    if (!(local_complement(local_complement(g, v), v) == g))
      c.fail(t, "g * v * v differs from g",
             {{"graph", graph_to_text(g)}, {"v", std::to_string(v)}});
  }
  // order independence of set complementation, exhaustive over orderings
  for (int t = 0; t < ordering_trials; ++t) {
    Rng rng = Rng::for_trial(o.seed ^ 0x5eedULL, t);
    Graph g = random_graph(rng, rng.uniform(2, 10), rng.pick<int>({20, 50, 80}));
    VertexSet iset = random_independent_set(rng, g);
    while (iset.size() > 4) iset.erase(std::prev(iset.end()));
    Graph ref = local_complement_set(g, iset);
    std::vector<VertexId> order(iset.begin(), iset.end());
    std::sort(order.begin(), order.end());
    do {
      Graph cur = g;
      for (VertexId v : order) cur = local_complement(cur, v);
      if (!(cur == ref)) {
        c.fail(t, "ordering " + seq_str(order) + " disagrees with set complementation",
               {{"graph", graph_to_text(g)}, {"i", set_str(iset)}});
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

void suite_pivot(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 500 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int attempt = 0; attempt < 100 && edges.empty(); ++attempt) {
      g = random_graph(rng, rng.uniform(2, 10), std::min(95, 40 + attempt * 10));
      const auto& ids = g.vertices();
      for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
          if (g.adjacent(ids[i], ids[j])) edges.emplace_back(ids[i], ids[j]);
    }
    if (edges.empty()) continue;
    auto [u, v] = edges[rng.uniform(0, static_cast<int>(edges.size()) - 1)];
    Graph uvu = pivot(g, u, v);
    Graph vuv = local_complement(local_complement(local_complement(g, v), u), v);
    if (!(uvu == vuv)) {
      c.fail(t, "g*u*v*u differs from g*v*u*v",
             {{"graph", graph_to_text(g)}, {"uv", seq_str({u, v})}});
      continue;
    }
    // displayed pivot formula on pairs outside {u, v}
    for (VertexId x : g.vertices())
      for (VertexId y : g.vertices()) {
        if (x >= y || x == u || x == v || y == u || y == v) continue;
        bool expect = g.adjacent(x, y) ^ (g.adjacent(x, u) && g.adjacent(y, v)) ^
                      (g.adjacent(x, v) && g.adjacent(y, u));
        if (uvu.adjacent(x, y) != expect) {
          c.fail(t, "pivot formula mismatch on an external pair",
                 {{"graph", graph_to_text(g)},
                  {"uv", seq_str({u, v})},
                  {"xy", seq_str({x, y})}});
          x = y = -1;
          break;
        }
      }
  }
}

void suite_commute0(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 1000 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 4);
    Graph flipped = apply_flip(g, f);
    VertexSet iset = random_common_independent_set(rng, g, flipped);
    Flip f2 = commute0(g, f, iset);
    long k = f.class_count();
    // The classical k*2^k label-space bound is not achievable on all valid
    // instances (an element of i in a class with tau(c,c) = 1 can force one
    // extra class); the corrected bound k*2^k + k is.
    std::map<std::string, std::string> instance{
        {"graph", graph_to_text(g)}, {"flip", flip_to_text(f)}, {"i", set_str(iset)}};
    c.bound("class count <= k*2^k", k << k, f2.class_count(), t, instance);
    c.bound("class count <= k*2^k + k (corrected)", (k << k) + k, f2.class_count(), t,
            instance);
    Graph left = apply_flip(local_complement_set(g, iset), f2);
    Graph right = local_complement_set(flipped, iset);
    if (!(left == right))
      c.fail(t, "g*i (+) f' differs from (g (+) f)*i",
             {{"graph", graph_to_text(g)},
              {"flip", flip_to_text(f)},
              {"i", set_str(iset)}});
  }
}

void suite_commute0b(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 300 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    int n = rng.uniform(2, 12);
    Graph g = random_graph(rng, n, rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 4);

    VertexSet iset;
    if (rng.coin()) {
      iset = random_independent_set(rng, g);
    } else {
      // homogeneous but not necessarily independent: rewrite adjacency
      // inside a random set by a class-pair function with zero diagonal
      std::vector<VertexId> order = g.vertices();
      rng.shuffle(order);
      int want = rng.uniform(1, std::min(6, n));
      iset = VertexSet(order.begin(), order.begin() + want);
      int k = f.class_count();
      std::vector<std::vector<std::uint8_t>> h(k + 1, std::vector<std::uint8_t>(k + 1, 0));
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) h[a][b] = h[b][a] = rng.coin() ? 1 : 0;
      GraphBuilder b(g);
      for (VertexId u : iset)
        for (VertexId v : iset)
          if (u < v) b.set_edge(u, v, h[f.class_of(u)][f.class_of(v)] != 0);
      g = b.build();
    }
    if (iset.empty()) iset.insert(*g.vertices().begin());

    auto traces = flip_classes_of(f, iset);
    const VertexSet& trace = traces[rng.uniform(0, static_cast<int>(traces.size()) - 1)];
    int cls = f.class_of(*trace.begin());
    VertexSet j;
    if (f.tau(cls, cls)) {
      // A diagonal-active class admits full compatibility only when j is its
      // whole trace, which then has to be a single vertex.
      std::vector<VertexId> tv(trace.begin(), trace.end());
      VertexId keep = tv[rng.uniform(0, static_cast<int>(tv.size()) - 1)];
      for (VertexId v : trace)
        if (v != keep) iset.erase(v);
      j.insert(keep);
    } else {
      for (VertexId v : trace)
        if (rng.coin()) j.insert(v);
      if (j.empty()) j.insert(*trace.begin());
    }

    try {
      Flip f2 = commute0b(g, f, iset, j);  // verifies its claims itself
      if (!is_compatible_on(f, f2, iset))
        c.fail(t, "output is not i-compatible with f",
               {{"graph", graph_to_text(g)},
                {"flip", flip_to_text(f)},
                {"i", set_str(iset)},
                {"j", set_str(j)}});
    } catch (const Error& e) {
      c.fail(t, e.what(),
             {{"graph", graph_to_text(g)},
              {"flip", flip_to_text(f)},
              {"i", set_str(iset)},
              {"j", set_str(j)}});
    }
  }
}

void suite_commute(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 500 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 10), rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 3);
    int k = f.class_count();
    auto instance = [&](const VertexSet& iset) {
      return std::map<std::string, std::string>{
          {"graph", graph_to_text(g)}, {"flip", flip_to_text(f)}, {"i", set_str(iset)}};
    };

    {
      VertexSet iset = random_independent_set(rng, g);
      CommuteResult res = commute_general(g, f, iset);
      c.bound("partition size <= 2k", 2L * k, static_cast<long>(res.partition.size()), t,
              instance(iset));
      VertexSet covered;
      for (const auto& part : res.partition)
        for (VertexId v : part)
          if (!covered.insert(v).second) c.fail(t, "partition parts overlap", instance(iset));
      if (covered != iset) c.fail(t, "partition does not cover i", instance(iset));
      try {
        Graph rhs = apply_flip(g, f);
        for (const auto& part : res.partition) rhs = local_complement_set(rhs, part);
        Graph lhs = apply_flip(local_complement_set(g, iset), res.flip);
        if (!(lhs == rhs)) c.fail(t, "commutation equality failed", instance(iset));
      } catch (const FaultyComplementation& e) {
        c.fail(t, std::string("faulty step during replay: ") + e.what(), instance(iset));
      }
    }
    {
      Graph flipped = apply_flip(g, f);
      VertexSet iset = random_independent_set(rng, flipped);
      CommuteResult res = commute_corollary_fwd(g, f, iset);
      try {
        Graph lhs = g;
        for (const auto& part : res.partition) lhs = local_complement_set(lhs, part);
        lhs = apply_flip(lhs, res.flip);
        Graph rhs = local_complement_set(flipped, iset);
        if (!(lhs == rhs)) c.fail(t, "forward corollary equality failed", instance(iset));
      } catch (const FaultyComplementation& e) {
        c.fail(t, std::string("faulty step during forward replay: ") + e.what(),
               instance(iset));
      }
    }
    {
      VertexSet iset = random_independent_set(rng, g);
      CommuteResult res = commute_corollary_bwd(g, f, iset);
      try {
        Graph lhs = apply_flip(g, res.flip);
        for (auto it = res.partition.rbegin(); it != res.partition.rend(); ++it)
          lhs = local_complement_set(lhs, *it);
        Graph rhs = apply_flip(local_complement_set(g, iset), f);
        if (!(lhs == rhs)) c.fail(t, "backward corollary equality failed", instance(iset));
      } catch (const FaultyComplementation& e) {
        c.fail(t, std::string("faulty step during backward replay: ") + e.what(),
               instance(iset));
      }
    }
  }
}

void suite_clean(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 500 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 4);
    VertexSet iset = random_independent_set(rng, g);
    Flip f2 = clean_flip(g, f, iset);
    c.bound("class count <= 2k", 2L * f.class_count(), f2.class_count());
    Graph got = apply_flip(g, f2);
    Graph want = remove_inner_edges(apply_flip(g, f), iset);
    if (!(got == want))
      c.fail(t, "clean flip does not remove exactly the inner edges",
             {{"graph", graph_to_text(g)},
              {"flip", flip_to_text(f)},
              {"i", set_str(iset)}});
  }
}

void suite_spread(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 500 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph g = random_graph(rng, rng.uniform(1, 12), rng.pick<int>({20, 50, 80}));
    Flip f = random_flip(rng, g, 3);
    VertexSet iset = random_independent_set(rng, g);
    Flip f2 = spread_flip(g, f, iset);
    int k = f.class_count();
    c.bound("class count <= 2k*2^(2k)", 2L * k * (1L << (2 * k)), f2.class_count());
    Graph target = apply_flip(local_complement_set(g, iset), f2);
    Graph base = apply_flip(g, f);
    auto dt = target.all_distances();
    auto db = base.all_distances();
    int n = g.order();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (!at_least_half(dt[x][y], db[x][y])) {
          c.fail(t, "distance halving violated",
                 {{"graph", graph_to_text(g)},
                  {"flip", flip_to_text(f)},
                  {"i", set_str(iset)},
                  {"pair", seq_str({g.vertices()[x], g.vertices()[y]})}});
          x = n;
          break;
        }
  }
}

void suite_svm_flip(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 300 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    int n = rng.uniform(2, 10);
    Graph g = random_graph(rng, n, rng.pick<int>({20, 50, 70}));
    // independent set of size k, one vertex per class
    std::vector<VertexId> order = g.vertices();
    rng.shuffle(order);
    int want = rng.uniform(1, std::min(4, n));
    VertexSet iset;
    for (VertexId v : order) {
      if (static_cast<int>(iset.size()) == want) break;
      bool ok = true;
      for (VertexId u : iset)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) iset.insert(v);
    }
    int k = static_cast<int>(iset.size());
    std::map<VertexId, int> iota;
    int next = 1;
    for (VertexId v : iset) iota[v] = next++;
    for (VertexId v : g.vertices())
      if (!iset.count(v)) iota[v] = rng.uniform(1, k);
    std::vector<std::vector<std::uint8_t>> tau(k, std::vector<std::uint8_t>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) tau[i][j] = tau[j][i] = rng.coin() ? 1 : 0;
    Flip f(k, std::move(iota), std::move(tau));

    auto seq = reduce_flip_by_pivots(g, f, iset);
    c.bound("p <= floor(3k/2)", (3L * k) / 2, static_cast<long>(seq.size()));
    std::map<VertexId, int> uses;
    for (VertexId z : seq) ++uses[z];
    for (auto [z, cnt] : uses)
      if (cnt > 2)
        c.fail(t, "element " + std::to_string(z) + " used more than twice",
               {{"graph", graph_to_text(g)}, {"flip", flip_to_text(f)}, {"i", set_str(iset)}});

    Graph cur = apply_flip(g, f);
    for (VertexId z : seq) cur = local_complement(cur, z);
    VertexSet nbh = g.closed_neighborhood(iset);
    if (!(cur.without(nbh) == g.without(nbh)))
      c.fail(t, "graphs differ outside the closed neighborhood of i",
             {{"graph", graph_to_text(g)},
              {"flip", flip_to_text(f)},
              {"i", set_str(iset)},
              {"seq", seq_str(seq)}});
  }
}

void suite_unsub(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 100 : o.trials;
  int rmax = o.r < 0 ? 7 : o.r;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    Graph h = random_graph(rng, rng.uniform(2, 6), rng.pick<int>({30, 50, 80}));
    for (int r = 0; r <= rmax; ++r) {
      auto [g, map] = subdivision(h, r);
      VMinorWitness w = unsubdivide(g, map);
      int reff = h.edge_count() > 0 ? r : 0;
      int expected = 0;
      while ((1 << expected) < reff + 1) ++expected;
      c.bound("depth(r=" + std::to_string(r) + ") <= ceil(log2(r+1))", expected, w.depth());
      if (w.depth() != expected) {
        c.fail(t, "witness depth off at r=" + std::to_string(r),
               {{"graph", graph_to_text(h)}});
        continue;
      }
      Graph replay = apply_witness(g, w);
      if (!(replay == h)) {
        c.fail(t, "replay does not reproduce the original graph at r=" + std::to_string(r),
               {{"graph", graph_to_text(h)}});
        continue;
      }
      if (g.order() <= 10 && expected <= 3) {
        auto res = is_depth_r_vminor(g, h, expected);
        if (!res.found)
          c.fail(t, "containment oracle misses the subdivision witness at r=" +
                        std::to_string(r),
                 {{"graph", graph_to_text(h)}});
      }
    }
  }
}

void suite_om2si(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 100 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    IntervalModel model;
    int q = rng.uniform(0, 8);
    int s = rng.uniform(q == 0 ? 1 : 0, 8);
    std::set<std::pair<long long, long long>> used;
    for (int i = 0; i < s; ++i) {
      Rational pos;
      do {
        pos = Rational(rng.uniform(-30, 30), 2);
      } while (!used.insert({pos.num(), pos.den()}).second);
      model.points.push_back({i, pos});
    }
    for (int i = 0; i < q; ++i)
      model.intervals.push_back(
          {100 + i, Rational(-rng.uniform(0, 24), 2), Rational(rng.uniform(0, 24), 2)});

    Graph h = interval_model_graph(model);
    auto emb = split_interval_to_ordered_matching(model);
    Graph target = local_complement(emb.om.graph, emb.a1);
    std::set<VertexId> image;
    bool bad = false;
    for (const auto& [mv, ov] : emb.embedding)
      if (!image.insert(ov).second) bad = true;
    if (bad || emb.embedding.size() != static_cast<size_t>(h.order())) {
      c.fail(t, "embedding is not injective or incomplete", {{"graph", graph_to_text(h)}});
      continue;
    }
    for (VertexId u : h.vertices())
      for (VertexId v : h.vertices()) {
        if (u >= v) continue;
        if (h.adjacent(u, v) !=
            target.adjacent(emb.embedding.at(u), emb.embedding.at(v))) {
          c.fail(t, "embedding does not preserve adjacency",
                 {{"graph", graph_to_text(h)}});
          u = v = 1 << 20;
          break;
        }
      }
  }
}

void suite_roundtrip_xk(SuiteCtx& c, const SuiteOptions& o) {
  int trials = o.trials < 0 ? 500 : o.trials;
  c.rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(o.seed, t);
    int n = rng.uniform(1, 8);
    int base = rng.uniform(0, 3);
    std::vector<int> dom;
    for (int i = 0; i < n; ++i) dom.push_back(base + i);
    int k = rng.uniform(1, 3);
    std::vector<BinaryStructure::RelationSpec> rels;
    for (int i = 1; i <= k; ++i) {
      BinaryStructure::RelationSpec r{"R" + std::to_string(i), rng.coin(), {}};
      for (int u : dom)
        for (int v : dom) {
          if (u == v) continue;
          if (r.symmetric && v < u) continue;
          if (rng.percent(25)) r.pairs.emplace_back(u, v);
        }
      rels.push_back(std::move(r));
    }
    std::vector<BinaryStructure::PredicateSpec> preds;
    int q = rng.uniform(0, 2);
    for (int i = 1; i <= q; ++i) {
      BinaryStructure::PredicateSpec p{"P" + std::to_string(i), {}};
      for (int v : dom)
        if (rng.coin()) p.members.insert(v);
      preds.push_back(std::move(p));
    }
    BinaryStructure m(dom, rels, preds);

    BinaryStructure back = interpretation_K(transduction_X(m));
    if (!(back == m)) {
      c.fail(t, "K(f_X(M)) differs from M", {{"structure", structure_to_text(m)}});
      continue;
    }

    // Encoding compatibility on the replayable regime: pairwise disjoint
    // complementation sets, all complemented elements deleted, the largest
    // id kept so both sides lay out clones identically.
    bool all_sym = true;
    for (int i = 0; i < m.relation_count(); ++i)
      if (!m.relation_symmetric(i)) all_sym = false;
    if (!all_sym || n < 2) continue;

    VertexSet taken;
    std::map<int, VertexSet> sets;
    for (int idx = 0; idx < m.relation_count(); ++idx) {
      VertexSet iset;
      std::vector<int> order = dom;
      rng.shuffle(order);
      for (int v : order) {
        if (v == dom.back() || taken.count(v) || !rng.percent(40)) continue;
        bool ok = true;
        for (int u : iset)
          if (m.rel(idx, u, v) || m.rel(idx, v, u)) {
            ok = false;
            break;
          }
        if (ok) {
          iset.insert(v);
          taken.insert(v);
        }
      }
      if (!iset.empty()) sets[idx] = iset;
    }
    VertexSet dels = taken;
    for (int v : dom)
      if (v != dom.back() && rng.percent(20)) dels.insert(v);

    BinaryStructure nstr = depth1_vm_structure(m, sets, dels);
    BinaryStructure fxn = transduction_X(nstr);
    BinaryStructure host = transduction_X(m);
    VertexSet clone_w, clone_d;
    for (const auto& [idx, iset] : sets)
      for (int v : iset) clone_w.insert(transduction_clone_id(m, v, idx + 1));
    for (int v : dels)
      for (int copy = 1; copy <= k; ++copy)
        clone_d.insert(transduction_clone_id(m, v, copy));
    BinaryStructure replay = depth1_vm_structure(host, {{0, clone_w}}, clone_d);
    if (!(replay == fxn))
      c.fail(t, "depth-1 minor does not replay inside the encoding",
             {{"structure", structure_to_text(m)}});
  }
}

void suite_example_si(SuiteCtx& c, const SuiteOptions& o) {
  int n = o.n < 0 ? 3 : o.n;
  c.rep.trials = 1;
  LabeledGraph psi = power_split_interval(n);
  BinaryStructure s = structure_from_graph(psi.graph);
  Signature sig;
  sig.binary_rels.insert("E");
  std::string dir = o.data_dir.empty() ? default_data_dir() : o.data_dir;
  FormulaLibrary lib = FormulaLibrary::parse_file(dir + "/formulas/si.fol", sig);

  EvalLimits lim;
  lim.max_domain = std::max(lim.max_domain, s.size());

  FormulaPtr nu = lib.instantiate("nu", {"x"});
  FormulaPtr eta = lib.instantiate("eta", {"x"});
  for (VertexId v : psi.graph.vertices()) {
    const std::string& role = psi.roles.at(v);
    bool is_a = role[0] == 'a';
    bool is_b = role[0] == 'b';
    bool got_nu = evaluate(s, nu, {{"x", v}}, lim);
    bool got_eta = evaluate(s, eta, {{"x", v}}, lim);
    if (got_nu != is_a)
      c.fail(0, "nu misclassifies " + role, {{"n", std::to_string(n)}});
    if (got_eta != is_b)
      c.fail(0, "eta misclassifies " + role, {{"n", std::to_string(n)}});
  }

  FormulaPtr phi = lib.instantiate("phi", {"x", "y"});
  for (int i = 1; i <= n; ++i) {
    VertexId ai = psi.by_role("a" + std::to_string(i));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::string brole = "b{";
      bool first = true;
      for (int e = 1; e <= n; ++e)
        if (mask & (1u << (e - 1))) {
          if (!first) brole += ",";
          brole += std::to_string(e);
          first = false;
        }
      brole += "}";
      VertexId bj = psi.by_role(brole);
      bool want = (mask >> (i - 1)) & 1;
      if (evaluate(s, phi, {{"x", ai}, {"y", bj}}, lim) != want) {
        c.fail(0, "phi(a" + std::to_string(i) + ", " + brole + ") should be " +
                      (want ? "true" : "false"),
               {{"n", std::to_string(n)}});
      }
    }
  }
}

void suite_footnote_perm(SuiteCtx& c, const SuiteOptions& o) {
  int nmax = o.n < 0 ? 4 : o.n;
  Signature sig;
  sig.binary_rels.insert("E");
  sig.unary_preds.insert("A");
  sig.unary_preds.insert("B");
  std::string dir = o.data_dir.empty() ? default_data_dir() : o.data_dir;
  FormulaLibrary lib = FormulaLibrary::parse_file(dir + "/formulas/perm_orders.fol", sig);
  int count = 0;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    do {
      ++count;
      if (!permutation_roundtrip(sigma, lib)) {
        std::string s;
        for (int v : sigma) s += std::to_string(v) + " ";
        c.fail(count, "permutation not recovered: " + s);
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  c.rep.trials = count;
}

using SuiteFn = void (*)(SuiteCtx&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"flip-involution", suite_flip_involution},
      {"lc-involution", suite_lc_involution},
      {"pivot", suite_pivot},
      {"commute0", suite_commute0},
      {"commute0b", suite_commute0b},
      {"commute", suite_commute},
      {"clean", suite_clean},
      {"spread", suite_spread},
      {"svm-flip", suite_svm_flip},
      {"unsub", suite_unsub},
      {"om2si", suite_om2si},
      {"roundtrip-XK", suite_roundtrip_xk},
      {"example-si", suite_example_si},
      {"footnote-perm", suite_footnote_perm},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool is_suite_name(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteCtx ctx;
    ctx.rep.suite = name;
    ctx.rep.seed = opt.seed;
    fn(ctx, opt);
    ctx.finish();
    return std::move(ctx.rep);
  }
  throw DomainError("unknown suite " + name);
}

std::string report_to_json(const VerificationReport& rep, const std::string& command_line) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["command"] = command_line;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : rep.failures) {
    nlohmann::json jf;
    jf["trial"] = f.trial;
    jf["message"] = f.message;
    jf["instance"] = f.instance;
    j["failures"].push_back(jf);
  }
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : rep.bounds) {
    nlohmann::json jb;
    jb["name"] = b.name;
    jb["claimed"] = b.claimed;
    jb["observed"] = b.observed;
    j["bounds"].push_back(jb);
  }
  j["ok"] = rep.ok();
  return j.dump(2);
}

}  // namespace vmlab
