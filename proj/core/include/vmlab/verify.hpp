#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vmlab/flip.hpp"
#include "vmlab/graph.hpp"
#include "vmlab/rng.hpp"

namespace vmlab {

// Randomized verification suites for the constructive identities. Every
// trial derives its own Rng from (suite seed, trial index) so any failure is
// replayable from the report alone.

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = -1;       // -1: use the suite default
  int n = -1;            // family size parameter (example-si, footnote-perm)
  int r = -1;            // subdivision bound (unsub)
  std::string data_dir;  // formula files; empty = compiled-in default
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;

  struct Failure {
    int trial;
    std::string message;
    std::map<std::string, std::string> instance;  // serialized artifacts
  };
  std::vector<Failure> failures;

  struct BoundCheck {
    std::string name;
    long claimed;
    long observed;  // worst value seen across trials
  };
  std::vector<BoundCheck> bounds;

  bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

// JSON rendering; embeds the command line so a report is self-contained.
std::string report_to_json(const VerificationReport& rep, const std::string& command_line);
std::string default_data_dir();

// Shared instance generators (also used by the test suites).
Graph random_graph(Rng& rng, int n, int edge_pct = 50);
Flip random_flip(Rng& rng, const Graph& g, int max_k);
VertexSet random_independent_set(Rng& rng, const Graph& g);
VertexSet random_common_independent_set(Rng& rng, const Graph& g1, const Graph& g2);

}  // namespace vmlab
