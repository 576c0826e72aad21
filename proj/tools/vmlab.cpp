// Batch front-end: family generators, single operations, randomized
// verification suites, the containment oracle, and formula evaluation.
//
// Exit codes: 0 success / verified / found, 1 counterexample / refuted,
// 2 usage, precondition, or capacity error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vmlab/canonical.hpp"
#include "vmlab/commute.hpp"
#include "vmlab/errors.hpp"
#include "vmlab/families.hpp"
#include "vmlab/graph_io.hpp"
#include "vmlab/logic.hpp"
#include "vmlab/search.hpp"
#include "vmlab/structures.hpp"
#include "vmlab/verify.hpp"
#include "vmlab/vminor.hpp"

namespace {

using namespace vmlab;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

VertexSet parse_id_set(const std::string& text) {
  auto v = parse_int_list(text);
  return VertexSet(v.begin(), v.end());
}

Matching parse_matching(const std::string& text) {
  Matching m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("matching entries look like k:l, got " + item);
    m.pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return m;
}

std::vector<std::vector<std::uint8_t>> parse_tau_file(const std::string& path, int k) {
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<std::uint8_t>> tau(k, std::vector<std::uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      int b;
      if (!(in >> b) || (b != 0 && b != 1))
        throw ValidationError("tau file: expected upper-triangle bits");
      tau[i][j] = tau[j][i] = static_cast<std::uint8_t>(b);
    }
  return tau;
}

void emit_graph(const LabeledGraph& lg, const std::string& out, const std::string& format) {
  if (format == "dot") {
    if (out == "-")
      std::cout << graph_to_dot(lg.graph, &lg.roles);
    else
      write_text_file(out, graph_to_dot(lg.graph, &lg.roles));
    return;
  }
  if (out == "-") {
    std::cout << graph_to_text(lg.graph);
    return;
  }
  write_graph_file(lg.graph, out);
  if (!lg.roles.empty()) write_text_file(out + ".labels", roles_to_text(lg.roles));
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out, const std::string& format, const std::string& tau_file) {
  LabeledGraph lg;
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw DomainError("family " + family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "half-graph") {
    need(1);
    lg = half_graph(std::stoi(params[0]));
  } else if (family == "permutation") {
    need(1);
    lg = permutation_graph(parse_int_list(params[0]));
  } else if (family == "comparability-grid") {
    need(1);
    lg = comparability_grid(std::stoi(params[0]));
  } else if (family == "star-crossing" || family == "clique-crossing" ||
             family == "half-crossing") {
    need(2);
    int r = std::stoi(params[0]), n = std::stoi(params[1]);
    CrossingKind kind = family == "star-crossing"    ? CrossingKind::Star
                        : family == "clique-crossing" ? CrossingKind::Clique
                                                       : CrossingKind::Half;
    std::optional<std::vector<std::vector<std::uint8_t>>> tau;
    if (!tau_file.empty()) tau = parse_tau_file(tau_file, r + 2);
    lg = crossing(kind, r, n, tau);
  } else if (family == "ordered-matching") {
    need(1);
    lg = ordered_matching_graph(parse_matching(params[0]));
  } else if (family == "power-split-interval") {
    need(1);
    lg = power_split_interval(std::stoi(params[0]));
  } else if (family == "subdivision") {
    need(2);
    Graph h = read_graph_file(params[0]);
    auto [g, map] = subdivision(h, std::stoi(params[1]));
    lg.graph = g;
    if (out != "-") {
      std::ostringstream ms;
      for (const auto& [e, path] : map.paths) {
        ms << e.first << ' ' << e.second << ' ' << path.size() - 2;
        for (size_t t = 1; t + 1 < path.size(); ++t) ms << ' ' << path[t];
        ms << '\n';
      }
      write_text_file(out + ".map", ms.str());
    }
  } else {
    throw DomainError("unknown family " + family);
  }
  emit_graph(lg, out, format);
  return 0;
}

SubdivisionMap read_map_file(const std::string& path) {
  SubdivisionMap map;
  std::istringstream in(read_text_file(path));
  VertexId u, v;
  int k;
  while (in >> u >> v >> k) {
    std::vector<VertexId> path_seq{u};
    for (int t = 0; t < k; ++t) {
      VertexId x;
      if (!(in >> x)) throw ValidationError("map file: truncated path");
      path_seq.push_back(x);
    }
    path_seq.push_back(v);
    map.paths[{u, v}] = std::move(path_seq);
  }
  return map;
}

int cmd_op(const std::string& name, const std::string& in_file,
           const std::vector<std::string>& args, const std::string& flip_file,
           const std::string& witness_file, const std::string& map_file,
           const std::string& out) {
  Graph g = read_graph_file(in_file);
  auto write_out = [&](const Graph& result) {
    if (out == "-")
      std::cout << graph_to_text(result);
    else
      write_graph_file(result, out);
  };
  if (name == "lc") {
    if (args.size() != 1) throw DomainError("op lc takes one vertex id");
    write_out(local_complement(g, std::stoi(args[0])));
  } else if (name == "pivot") {
    if (args.size() != 2) throw DomainError("op pivot takes two vertex ids");
    write_out(pivot(g, std::stoi(args[0]), std::stoi(args[1])));
  } else if (name == "lc-set") {
    if (args.size() != 1) throw DomainError("op lc-set takes one id list");
    write_out(local_complement_set(g, parse_id_set(args[0])));
  } else if (name == "induced") {
    if (args.size() != 1) throw DomainError("op induced takes one id list");
    write_out(g.induced(parse_id_set(args[0])));
  } else if (name == "delete") {
    if (args.size() != 1) throw DomainError("op delete takes one id list");
    write_out(g.without(parse_id_set(args[0])));
  } else if (name == "flip") {
    if (flip_file.empty()) throw DomainError("op flip needs --flip");
    write_out(apply_flip(g, flip_from_text(read_text_file(flip_file))));
  } else if (name == "clean") {
    if (flip_file.empty() || args.size() != 1)
      throw DomainError("op clean needs --flip and one id list");
    Flip f2 = clean_flip(g, flip_from_text(read_text_file(flip_file)), parse_id_set(args[0]));
    if (out == "-")
      std::cout << flip_to_text(f2);
    else
      write_text_file(out, flip_to_text(f2));
  } else if (name == "witness") {
    if (witness_file.empty()) throw DomainError("op witness needs --witness");
    write_out(apply_witness(g, witness_from_text(read_text_file(witness_file))));
  } else if (name == "unsub") {
    if (map_file.empty()) throw DomainError("op unsub needs --map");
    VMinorWitness w = unsubdivide(g, read_map_file(map_file));
    if (out == "-")
      std::cout << witness_to_text(w);
    else
      write_text_file(out, witness_to_text(w));
  } else if (name == "reduce") {
    if (flip_file.empty() || args.size() != 1)
      throw DomainError("op reduce needs --flip and one id list");
    auto seq = reduce_flip_by_pivots(g, flip_from_text(read_text_file(flip_file)),
                                     parse_id_set(args[0]));
    for (size_t t = 0; t < seq.size(); ++t)
      std::cout << seq[t] << (t + 1 == seq.size() ? '\n' : ' ');
  } else {
    throw DomainError("unknown op " + name);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& report_file,
               const std::string& command_line) {
  VerificationReport rep = run_suite(suite, opt);
  std::cout << "suite " << rep.suite << ": " << rep.trials << " trials, "
            << rep.failures.size() << " failures\n";
  for (const auto& b : rep.bounds)
    std::cout << "  bound " << b.name << ": claimed " << b.claimed << ", observed "
              << b.observed << "\n";
  for (const auto& f : rep.failures) {
    std::cout << "  FAIL trial " << f.trial << ": " << f.message << "\n";
    for (const auto& [k, v] : f.instance) std::cout << "    " << k << ":\n" << v;
  }
  if (!report_file.empty()) write_text_file(report_file, report_to_json(rep, command_line));
  return rep.ok() ? 0 : 1;
}

int cmd_contains(const std::string& g_file, const std::string& h_file, int depth,
                 const std::string& witness_out, const SearchCaps& caps,
                 const std::string& format) {
  Graph g = read_graph_file(g_file);
  Graph h = read_graph_file(h_file);
  ContainmentResult res = is_depth_r_vminor(g, h, depth, caps);
  std::cout << (res.found ? "found" : "not a depth-" + std::to_string(depth) + " vertex minor")
            << " (explored " << res.stats.nodes_explored << " graphs, " << res.stats.dedup_hits
            << " dedup hits)\n";
  if (res.found && !witness_out.empty()) {
    if (format == "json-witness") {
      std::ostringstream js;
      js << "{\n  \"witness\": " << '"';
      std::string w = witness_to_text(*res.witness);
      for (char ch : w) {
        if (ch == '\n')
          js << "\\n";
        else
          js << ch;
      }
      js << "\",\n  \"embedding\": {";
      bool first = true;
      for (const auto& [hu, gu] : *res.embedding) {
        if (!first) js << ", ";
        js << '"' << hu << "\": " << gu;
        first = false;
      }
      js << "},\n  \"nodes_explored\": " << res.stats.nodes_explored
         << ",\n  \"dedup_hits\": " << res.stats.dedup_hits << "\n}\n";
      write_text_file(witness_out, js.str());
    } else {
      std::ostringstream ws;
      ws << witness_to_text(*res.witness);
      ws << "embedding";
      for (const auto& [hu, gu] : *res.embedding) ws << ' ' << hu << ':' << gu;
      ws << '\n';
      write_text_file(witness_out, ws.str());
    }
  }
  return res.found ? 0 : 1;
}

int cmd_eval(const std::string& structure_file, const std::string& formula_file,
             const std::string& formula_name, const std::string& assign_text, int cap_domain) {
  BinaryStructure s = structure_from_text(read_text_file(structure_file));
  Signature sig;
  for (int i = 0; i < s.relation_count(); ++i) sig.binary_rels.insert(s.relation_name(i));
  for (int i = 0; i < s.predicate_count(); ++i) sig.unary_preds.insert(s.predicate_name(i));
  FormulaLibrary lib = FormulaLibrary::parse_file(formula_file, sig);
  Assignment a;
  std::stringstream ss(assign_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("assignments look like x=3, got " + item);
    a[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  EvalLimits lim;
  if (cap_domain > 0) lim.max_domain = cap_domain;
  bool value = evaluate(s, lib.get(formula_name), a, lim);
  std::cout << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph calculus workbench: flips, local complementations, shallow vertex "
               "minors, and their verification suites"};
  app.require_subcommand(1);

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family");
  std::string gen_family, gen_out = "-", gen_format = "text", gen_tau;
  std::vector<std::string> gen_params;
  gen->add_option("family", gen_family, "family name")->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("-o,--out", gen_out, "output file ('-' for stdout)");
  gen->add_option("--format", gen_format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}))
      ->envname("VMLAB_FORMAT");
  gen->add_option("--flip-tau", gen_tau, "tau table file for flipped crossings");

  // op
  auto* op = app.add_subcommand("op", "apply one operation to a graph file");
  std::string op_name, op_in, op_out = "-", op_flip, op_witness, op_map;
  std::vector<std::string> op_args;
  op->add_option("name", op_name, "lc pivot lc-set induced delete flip clean witness unsub reduce")
      ->required();
  op->add_option("-i,--in", op_in, "input graph file")->required();
  op->add_option("args", op_args, "operation arguments");
  op->add_option("-o,--out", op_out, "output file ('-' for stdout)");
  op->add_option("--flip", op_flip, "flip file");
  op->add_option("--witness", op_witness, "witness file");
  op->add_option("--map", op_map, "subdivision map file");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite, verify_report, verify_data;
  SuiteOptions sopt;
  long long seed_opt = 1;
  verify->add_option("suite", verify_suite, "suite name")->required();
  verify->add_option("--seed", seed_opt, "suite seed")->envname("VMLAB_SEED");
  verify->add_option("--trials", sopt.trials, "trial count")->envname("VMLAB_TRIALS");
  verify->add_option("--n", sopt.n, "size parameter");
  verify->add_option("--r", sopt.r, "depth/subdivision parameter");
  verify->add_option("--report", verify_report, "write a JSON report here");
  verify->add_option("--data", verify_data, "formula data directory")->envname("VMLAB_DATA");

  // contains
  auto* contains = app.add_subcommand("contains", "depth-r vertex minor containment");
  std::string c_g, c_h, c_witness, c_format = "text";
  int c_r = 1;
  SearchCaps caps;
  contains->add_option("-g,--graph", c_g, "host graph file")->required();
  contains->add_option("-p,--pattern", c_h, "pattern graph file")->required();
  contains->add_option("-r,--depth", c_r, "depth bound");
  contains->add_option("--witness", c_witness, "write the witness here");
  contains->add_option("--cap-n", caps.max_order, "order cap")->envname("VMLAB_CAP_N");
  contains->add_option("--cap-depth", caps.max_depth, "depth cap")->envname("VMLAB_CAP_DEPTH");
  contains->add_option("--format", c_format, "text or json-witness")
      ->check(CLI::IsMember({"text", "json-witness"}));

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a named formula on a structure");
  std::string e_structure, e_formulas, e_name, e_assign;
  int e_cap = -1;
  eval->add_option("-s,--structure", e_structure, "structure file")->required();
  eval->add_option("-f,--formulas", e_formulas, "formula library file")->required();
  eval->add_option("--formula", e_name, "formula name")->required();
  eval->add_option("--assign", e_assign, "assignment, e.g. x=3,y=5");
  eval->add_option("--cap-n", e_cap, "domain cap override")->envname("VMLAB_CAP_N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(gen_family, gen_params, gen_out, gen_format, gen_tau);
    if (*op) return cmd_op(op_name, op_in, op_args, op_flip, op_witness, op_map, op_out);
    if (*verify) {
      sopt.seed = static_cast<std::uint64_t>(seed_opt);
      sopt.data_dir = verify_data;
      if (!is_suite_name(verify_suite)) {
        std::cerr << "unknown suite " << verify_suite << "; available:";
        for (const auto& s : suite_names()) std::cerr << ' ' << s;
        std::cerr << "\n";
        return 2;
      }
      return cmd_verify(verify_suite, sopt, verify_report, command_line);
    }
    if (*contains) return cmd_contains(c_g, c_h, c_r, c_witness, caps, c_format);
    if (*eval) return cmd_eval(e_structure, e_formulas, e_name, e_assign, e_cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
