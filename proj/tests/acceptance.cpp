// Acceptance gate: sixteen checks, each at its full scale,
// with exact GF(2)/integer tolerances. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.
//
// Set VMLAB_EXTENDED=1 to include the larger power-split-interval instance.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "vmlab/canonical.hpp"
#include "vmlab/commute.hpp"
#include "vmlab/families.hpp"
#include "vmlab/graph_io.hpp"
#include "vmlab/logic.hpp"
#include "vmlab/search.hpp"
#include "vmlab/structures.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

#include "testutil.hpp"

using namespace vmlab;
using namespace vmlab::test;

namespace {

constexpr std::uint64_t kSeed = 20240811;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string suite_summary(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.trials << " trials";
  for (const auto& b : rep.bounds)
    out << "; " << b.name << ": " << b.observed << "/" << b.claimed;
  if (!rep.failures.empty()) out << "; " << rep.failures.size() << " failures";
  return out.str();
}

Outcome from_suite(const std::string& name, SuiteOptions opt) {
  VerificationReport rep = run_suite(name, opt);
  return {rep.ok(), suite_summary(rep)};
}

Outcome criterion_flip_involution() {
  SuiteOptions opt;
  opt.seed = kSeed;
  opt.trials = 1000;
  return from_suite("flip-involution", opt);
}

Outcome criterion_lc() {
  SuiteOptions opt;
  opt.seed = kSeed + 1;
  opt.trials = 1000;  // plus 200 ordering trials inside the suite
  Outcome a = from_suite("lc-involution", opt);
  SuiteOptions popt;
  popt.seed = kSeed + 2;
  popt.trials = 500;
  Outcome b = from_suite("pivot", popt);
  return {a.pass && b.pass, a.detail + " | pivot: " + b.detail};
}

Outcome criterion_commute0() {
  SuiteOptions opt;
  opt.seed = kSeed + 3;
  opt.trials = 1000;
  VerificationReport rep = run_suite("commute0", opt);
  int equality_failures = 0, bound_failures = 0;
  for (const auto& f : rep.failures)
    (f.message.rfind("bound ", 0) == 0 ? bound_failures : equality_failures)++;
  std::ostringstream out;
  out << "equality " << (opt.trials - equality_failures) << "/" << opt.trials;
  for (const auto& b : rep.bounds) out << "; " << b.name << ": " << b.observed << "/" << b.claimed;
  if (bound_failures > 0)
    out << "; classical class bound k*2^k exceeded in " << bound_failures
        << " trials (one extra class per diagonal-active class holding an element of i is "
           "unavoidable; the attainable bound is k*2^k + k)";
  return {rep.ok(), out.str()};
}

Outcome criterion_commute0b() {
  SuiteOptions opt;
  opt.seed = kSeed + 4;
  opt.trials = 300;
  return from_suite("commute0b", opt);
}

Outcome criterion_commute() {
  SuiteOptions opt;
  opt.seed = kSeed + 5;
  opt.trials = 500;
  return from_suite("commute", opt);
}

Outcome criterion_clean() {
  SuiteOptions opt;
  opt.seed = kSeed + 6;
  opt.trials = 500;
  return from_suite("clean", opt);
}

Outcome criterion_spread() {
  SuiteOptions opt;
  opt.seed = kSeed + 7;
  opt.trials = 500;
  return from_suite("spread", opt);
}

Outcome criterion_svm_flip() {
  SuiteOptions opt;
  opt.seed = kSeed + 8;
  opt.trials = 300;
  return from_suite("svm-flip", opt);
}

Outcome criterion_unsub() {
  SuiteOptions opt;
  opt.seed = kSeed + 9;
  opt.trials = 100;
  opt.r = 7;
  return from_suite("unsub", opt);
}

Outcome criterion_example_si() {
  bool extended = std::getenv("VMLAB_EXTENDED") != nullptr;
  std::ostringstream detail;
  bool ok = true;
  for (int n = 2; n <= (extended ? 4 : 3); ++n) {
    SuiteOptions opt;
    opt.n = n;
    opt.data_dir = source_dir() + "/data";
    VerificationReport rep = run_suite("example-si", opt);
    detail << "n=" << n << ": " << (rep.ok() ? "ok" : "failed") << "  ";
    ok = ok && rep.ok();
  }
  if (!extended) detail << "(n=4 behind VMLAB_EXTENDED)";
  return {ok, detail.str()};
}

Outcome criterion_om2si() {
  SuiteOptions opt;
  opt.seed = kSeed + 10;
  opt.trials = 100;
  return from_suite("om2si", opt);
}

Outcome criterion_half_graph_hosts() {
  // Split interval host: points b_j at 2j, one common point c, intervals
  // [2i, 2n+1]; complementing at c yields the half graph.
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    IntervalModel model;
    for (int j = 1; j <= n; ++j) model.points.push_back({j - 1, Rational(2 * j)});
    model.points.push_back({n, Rational(2 * n + 1)});
    for (int i = 1; i <= n; ++i)
      model.intervals.push_back({n + i, Rational(2 * i), Rational(2 * n + 1)});
    Graph host = interval_model_graph(model);
    Graph hg = half_graph(n).graph;
    auto res = is_depth_r_vminor(host, hg, 1);
    if (!res.found) return {false, "half graph n=" + std::to_string(n) + " not found"};
    Graph replay = apply_witness(host, *res.witness);
    for (VertexId u : hg.vertices())
      for (VertexId v : hg.vertices()) {
        if (u >= v) continue;
        if (hg.adjacent(u, v) !=
            replay.adjacent(res.embedding->at(u), res.embedding->at(v)))
          return {false, "witness for n=" + std::to_string(n) + " does not replay"};
      }
    ++checked;
  }
  return {true, std::to_string(checked) + " hosts, all witnesses replay exactly"};
}

Outcome criterion_roundtrip_xk() {
  SuiteOptions opt;
  opt.seed = kSeed + 11;
  opt.trials = 500;
  return from_suite("roundtrip-XK", opt);
}

Outcome criterion_footnote_perm() {
  SuiteOptions opt;
  opt.n = 4;
  opt.data_dir = source_dir() + "/data";
  return from_suite("footnote-perm", opt);
}

Outcome criterion_ladder_and_evaluator() {
  Signature sig;
  sig.binary_rels.insert("E");
  sig.unary_preds.insert("P");
  FormulaPtr e = parse_formula("E(x,y)", sig);
  for (int n = 1; n <= 5; ++n) {
    LabeledGraph hg = half_graph(n);
    int got = ladder_index(structure_from_graph(hg.graph), e, "x", "y", n);
    if (got != n)
      return {false, "ladder index of the half graph at n=" + std::to_string(n) + " is " +
                         std::to_string(got)};
  }
  int agreements = 0;
  for (int t = 0; t < 1000; ++t) {
    Rng rng = Rng::for_trial(kSeed + 12, t);
    Graph g = random_graph(rng, rng.uniform(1, 6), rng.uniform(10, 90));
    BinaryStructure::RelationSpec espec{"E", true, {}};
    for (VertexId u : g.vertices())
      for (VertexId v : g.vertices())
        if (u < v && g.adjacent(u, v)) espec.pairs.emplace_back(u, v);
    BinaryStructure::PredicateSpec p{"P", {}};
    for (VertexId v : g.vertices())
      if (rng.coin()) p.members.insert(v);
    BinaryStructure s(g.vertices(), {espec}, {p});
    FormulaPtr f = random_formula(rng, rng.uniform(1, 3), {"x", "y"}, true);
    Assignment a{{"x", rng.pick(g.vertices())}, {"y", rng.pick(g.vertices())}};
    std::map<std::string, int> ref_a(a.begin(), a.end());
    if (evaluate(s, f, a) != reference_evaluate(s, f, ref_a))
      return {false, "memoized and reference evaluators disagree at trial " +
                         std::to_string(t)};
    ++agreements;
  }
  return {true, "ladder index n for n <= 5; evaluator agreement 1000/1000"};
}

Outcome criterion_planted_search() {
  int found = 0, monotone_checked = 0;
  for (int t = 0; t < 200; ++t) {
    Rng rng = Rng::for_trial(kSeed + 13, t);
    int depth = t % 10 == 9 ? 3 : (t % 3 == 2 ? 2 : 1);
    int n = depth == 1 ? rng.uniform(5, 8) : depth == 2 ? rng.uniform(4, 6) : rng.uniform(4, 5);
    Graph g = random_graph(rng, n, rng.uniform(20, 70));
    VMinorWitness w;
    Graph cur = g;
    for (int d = 0; d < depth; ++d) {
      VertexSet iset = random_independent_set(rng, cur);
      w.steps.push_back(iset);
      cur = local_complement_set(cur, iset);
    }
    VertexSet dels;
    for (VertexId v : g.vertices())
      if (rng.percent(25) && static_cast<int>(dels.size()) + 2 < n) dels.insert(v);
    Graph h = cur.without(dels);

    auto res = is_depth_r_vminor(g, h, depth);
    if (!res.found)
      return {false, "planted witness not found at trial " + std::to_string(t)};
    Graph replay = apply_witness(g, *res.witness);
    for (VertexId u : h.vertices())
      for (VertexId v : h.vertices()) {
        if (u >= v) continue;
        if (h.adjacent(u, v) !=
            replay.adjacent(res.embedding->at(u), res.embedding->at(v)))
          return {false, "found witness does not replay at trial " + std::to_string(t)};
      }
    ++found;
    if (depth == 1 && n <= 6 && t % 4 == 0) {
      if (!is_depth_r_vminor(g, h, 2).found)
        return {false, "monotonicity in depth violated at trial " + std::to_string(t)};
      ++monotone_checked;
    }
  }
  return {true, "200 planted witnesses found; monotonicity spot-checked on " +
                    std::to_string(monotone_checked) + " instances"};
}

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;  // 0: no time budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "flip involution", 5, criterion_flip_involution},
      {2, "local complementation involution, orderings, pivot", 0, criterion_lc},
      {3, "commutation of a flip past an independent set", 30, criterion_commute0},
      {4, "commutation variant with homogeneity bookkeeping", 0, criterion_commute0b},
      {5, "recursive commutation and both corollaries", 0, criterion_commute},
      {6, "edge-clearing flip", 0, criterion_clean},
      {7, "distance-preserving spread flip", 0, criterion_spread},
      {8, "flip elimination by pivots", 0, criterion_svm_flip},
      {9, "subdivision reduction", 0, criterion_unsub},
      {10, "power graph in a split interval graph", 60, criterion_example_si},
      {11, "split interval graphs into ordered matching graphs", 0, criterion_om2si},
      {12, "half graphs at depth 1 in split interval hosts", 0, criterion_half_graph_hosts},
      {13, "structure encoding round trip", 0, criterion_roundtrip_xk},
      {14, "permutation recovery through definable orders", 0, criterion_footnote_perm},
      {15, "ladder index and evaluator agreement", 0, criterion_ladder_and_evaluator},
      {16, "containment oracle completeness and monotonicity", 0, criterion_planted_search},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds <= 0 || secs <= c.budget_seconds;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << (c.id < 10 ? "0" : "") << c.id << " " << c.label
         << " — " << out.detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << "s";
    if (c.budget_seconds > 0) line << " of " << c.budget_seconds << "s";
    line << ")";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
