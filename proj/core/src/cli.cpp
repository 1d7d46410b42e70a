#include "cardzk/cli.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cardzk/applications.hpp"
#include "cardzk/bridges.hpp"
#include "cardzk/errors.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/spanning.hpp"
#include "cardzk/zk_audit.hpp"

namespace cardzk {

namespace {

// Instance ceilings for the exhaustive modes; beyond them enumeration is
// astronomically large and the run is refused instead of left to spin.
constexpr int kEnumVerifyVertexCap = 6;
constexpr int kExactAuditVertexCap = 4;
constexpr int kEnumVerifyCellCap = 9;
constexpr int kExactAuditCellCap = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

EdgeFlags full_subgraph(const Graph& g) {
  return EdgeFlags(static_cast<size_t>(g.edge_count()), true);
}

void write_transcript(const Transcript& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << t.serialize();
}

void print_verdict(const Verdict& v) {
  if (v.accepted)
    std::cout << "verdict=accept\n";
  else
    std::cout << "verdict=reject where=" << v.where << " why=" << v.why << "\n";
}

void print_budget(const Graph& g) {
  CardBudget budget = card_budget(g);
  std::cout << "budget: encoding=" << budget.encoding << " marking=" << budget.marking << "\n";
}

struct VerifyArgs {
  std::string instance;
  std::string witness;
  std::uint64_t seed = 0;
  std::string mode = "seeded";
  std::string transcript;
  int samples = 10'000;
  int leaves = 0;
};

// Shared tail of every verify command: one seeded run (also the source of
// the written transcript), plus a full verdict sweep in enumerated mode.
int finish_verify(const ProtocolRun& run, const VerifyArgs& args, const Graph* budget_graph,
                  int rounds) {
  Transcript t;
  Verdict v = run_seeded(run, args.seed, t);
  if (args.mode == "enumerated") {
    VerdictSweep sweep = sweep_verdicts(run);
    v = sweep.verdict;
    std::cout << "enumerated runs=" << sweep.total_runs << "\n";
  }
  print_verdict(v);
  std::cout << "rounds=" << rounds << "\n";
  if (budget_graph) print_budget(*budget_graph);
  if (!args.transcript.empty()) {
    write_transcript(t, args.transcript);
    std::cout << "transcript=" << args.transcript << "\n";
  }
  return v.accepted ? 0 : 1;
}

void require_enum_cap(const std::string& mode, int measure, int cap, const std::string& what) {
  if (mode == "enumerated" && measure > cap)
    throw CapacityError("enumerated mode is capped at " + what + " " + std::to_string(cap));
}

int cmd_verify_spanning(const VerifyArgs& args) {
  Graph g = Graph::parse(read_file(args.instance));
  EdgeFlags h = parse_subgraph(g, read_file(args.witness));
  require_enum_cap(args.mode, g.vertex_count(), kEnumVerifyVertexCap, "n <=");
  return finish_verify(spanning_run(g, h), args, &g, g.vertex_count() - 1);
}

int cmd_verify_hamiltonian(const VerifyArgs& args) {
  Graph g = Graph::parse(read_file(args.instance));
  EdgeFlags h = parse_subgraph(g, read_file(args.witness));
  require_enum_cap(args.mode, g.vertex_count(), kEnumVerifyVertexCap, "n <=");
  return finish_verify(hamiltonian_run(g, h), args, &g, g.vertex_count() - 1);
}

int cmd_verify_maxleaf(const VerifyArgs& args) {
  Graph g = Graph::parse(read_file(args.instance));
  EdgeFlags h = parse_subgraph(g, read_file(args.witness));
  require_enum_cap(args.mode, g.vertex_count(), kEnumVerifyVertexCap, "n <=");
  return finish_verify(max_leaf_run(g, args.leaves, h), args, &g, g.vertex_count() - 1);
}

int cmd_verify_bridges(const VerifyArgs& args) {
  BridgesInstance inst = BridgesInstance::parse(read_file(args.instance));
  BridgesSolution sol = BridgesSolution::parse(read_file(args.witness));
  require_enum_cap(args.mode, inst.rows * inst.cols, kEnumVerifyCellCap, "cells <=");
  int islands = static_cast<int>(inst.islands().size());
  if (islands > 1) {
    Graph g = island_graph(inst);
    return finish_verify(bridges_run(inst, sol), args, &g, islands - 1);
  }
  return finish_verify(bridges_run(inst, sol), args, nullptr, 0);
}

int finish_audit(const ProtocolRun& real_side, const ProtocolRun& sim_side,
                 const VerifyArgs& args) {
  ComparisonReport report;
  if (args.mode == "enumerated") {
    std::cout << "mode=EXACT\n";
    FactoredEnumeration real_dist = enumerate_factored(real_side);
    FactoredEnumeration sim_dist = enumerate_factored(sim_side);
    std::cout << "real: factors=" << real_dist.factors.size()
              << " runs=" << real_dist.total_runs << "\n";
    std::cout << "simulated: factors=" << sim_dist.factors.size()
              << " runs=" << sim_dist.total_runs << "\n";
    report = compare_exact(real_dist, sim_dist);
  } else {
    std::cout << "mode=STATISTICAL samples=" << args.samples << "\n";
    report = compare_statistical(real_side, sim_side, args.samples, 0.001, args.seed);
  }
  std::cout << "result=" << (report.equal ? "equal" : "unequal") << "\n";
  if (!report.detail.empty()) std::cout << "detail: " << report.detail << "\n";
  return report.equal ? 0 : 1;
}

int cmd_audit(const std::string& protocol, const VerifyArgs& args) {
  if (protocol == "bridges") {
    BridgesInstance inst = BridgesInstance::parse(read_file(args.instance));
    BridgesSolution sol;
    if (args.witness.empty()) {
      std::optional<BridgesSolution> solved = solve_bridges(inst);
      if (!solved) throw ParseError("grid has no solution to use as a witness");
      sol = std::move(*solved);
    } else {
      sol = BridgesSolution::parse(read_file(args.witness));
    }
    if (args.mode == "enumerated" && inst.rows * inst.cols > kExactAuditCellCap)
      throw CapacityError("EXACT audit is capped at " + std::to_string(kExactAuditCellCap) +
                          " grid cells");
    return finish_audit(bridges_run(inst, sol), bridges_simulator(inst), args);
  }

  Graph g = Graph::parse(read_file(args.instance));
  EdgeFlags h = args.witness.empty() ? full_subgraph(g)
                                     : parse_subgraph(g, read_file(args.witness));
  if (args.mode == "enumerated" && g.vertex_count() > kExactAuditVertexCap)
    throw CapacityError("EXACT audit is capped at n <= " +
                        std::to_string(kExactAuditVertexCap));
  if (protocol == "hamiltonian")
    return finish_audit(hamiltonian_run(g, h), hamiltonian_simulator(g), args);
  return finish_audit(spanning_run(g, h), spanning_simulator(g), args);
}

int cmd_card_budget(const std::string& path) {
  Graph g = Graph::parse(read_file(path));
  CardBudget budget = card_budget(g);
  std::cout << "encoding=" << budget.encoding << " marking=" << budget.marking << "\n";
  return 0;
}

void add_common_flags(CLI::App* sub, VerifyArgs& args) {
  sub->add_option("--seed", args.seed, "PRNG seed (seeded mode)")->default_val(0);
  sub->add_option("--mode", args.mode, "randomness mode")
      ->check(CLI::IsMember({"seeded", "enumerated"}))
      ->default_val("seeded");
  sub->add_option("--transcript", args.transcript, "write the verifier view to this file");
  sub->add_option("--samples", args.samples, "sample count for statistical audits")
      ->check(CLI::PositiveNumber)
      ->default_val(10'000);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"card protocol engine: zero-knowledge proofs of connected spanning subgraphs"};
  app.require_subcommand(1);

  VerifyArgs span_args, ham_args, leaf_args, bridge_args, audit_args;
  std::string budget_path, audit_protocol;

  CLI::App* span = app.add_subcommand("verify-spanning",
                                      "prove a hidden subgraph is connected and spanning");
  span->add_option("graph", span_args.instance, "graph file")->required();
  span->add_option("subgraph", span_args.witness, "witness edge list (prover-side)")->required();
  add_common_flags(span, span_args);

  CLI::App* ham = app.add_subcommand("verify-hamiltonian",
                                     "prove a hidden subgraph is a Hamiltonian cycle");
  ham->add_option("graph", ham_args.instance, "graph file")->required();
  ham->add_option("subgraph", ham_args.witness, "witness edge list (prover-side)")->required();
  add_common_flags(ham, ham_args);

  CLI::App* leaf = app.add_subcommand(
      "verify-maxleaf", "prove a hidden subgraph is connected spanning with enough leaves");
  leaf->add_option("graph", leaf_args.instance, "graph file")->required();
  leaf->add_option("subgraph", leaf_args.witness, "witness edge list (prover-side)")->required();
  leaf->add_option("--leaves", leaf_args.leaves, "claimed leaf count")->required();
  add_common_flags(leaf, leaf_args);

  CLI::App* bridges = app.add_subcommand("verify-bridges",
                                         "prove knowledge of a Bridges puzzle solution");
  bridges->add_option("grid", bridge_args.instance, "puzzle grid file")->required();
  bridges->add_option("solution", bridge_args.witness, "solution file (prover-side)")->required();
  add_common_flags(bridges, bridge_args);

  CLI::App* audit = app.add_subcommand(
      "audit-zk", "compare real against simulated transcript distributions");
  audit->add_option("--protocol", audit_protocol, "protocol to audit")
      ->check(CLI::IsMember({"spanning", "hamiltonian", "bridges"}))
      ->required();
  audit->add_option("instance", audit_args.instance, "graph or grid file")->required();
  audit->add_option("witness", audit_args.witness,
                    "witness file (defaults: all edges, or solve the grid)");
  add_common_flags(audit, audit_args);

  CLI::App* budget = app.add_subcommand("card-budget", "print the closed-form card budget");
  budget->add_option("graph", budget_path, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (span->parsed()) return cmd_verify_spanning(span_args);
    if (ham->parsed()) return cmd_verify_hamiltonian(ham_args);
    if (leaf->parsed()) return cmd_verify_maxleaf(leaf_args);
    if (bridges->parsed()) return cmd_verify_bridges(bridge_args);
    if (audit->parsed()) return cmd_audit(audit_protocol, audit_args);
    if (budget->parsed()) return cmd_card_budget(budget_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cardzk
