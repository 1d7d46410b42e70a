#include <vector>

#include "cardzk/graph.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/spanning.hpp"
#include "cardzk/table.hpp"
#include "cardzk/zk_audit.hpp"
#include "doctest.h"

using namespace cardzk;

namespace {

bool next_subgraph(EdgeFlags& h) {
  for (size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) {
      h[i] = true;
      return true;
    }
    h[i] = false;
  }
  return false;
}

}  // namespace

TEST_CASE("every connected spanning subgraph is accepted on every leaf") {
  for (const Graph& g : {make_complete(2), make_path(3), make_complete(3), make_cycle(4)}) {
    EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
    do {
      if (!oracle_connected_spanning(g, h)) continue;
      VerdictSweep vs = sweep_verdicts(spanning_run(g, h));
      CHECK(vs.verdict.accepted);
      CHECK(vs.total_runs > 1);
    } while (next_subgraph(h));
  }
}

TEST_CASE("the smallest instance accepts across the joint outcome space") {
  Graph g = make_complete(2);
  EdgeFlags h{true};
  ProtocolRun run = spanning_run(g, h);
  OutcomeEnumerator::Options opts;
  opts.fidelity = RandomSource::Fidelity::Verdict;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        Table table(rng, /*logging=*/false);
        CHECK(run(table).accepted);
      },
      opts);
  CHECK(leaves > 100);  // joint product over all shuffle groups
}

TEST_CASE("every non-connected-spanning subgraph is rejected on every leaf") {
  for (const Graph& g : {make_complete(2), make_path(3), make_complete(3), make_cycle(4)}) {
    EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
    do {
      if (oracle_connected_spanning(g, h)) continue;
      VerdictSweep vs = sweep_verdicts(spanning_run(g, h));
      CHECK_FALSE(vs.verdict.accepted);
      CHECK_FALSE(vs.verdict.where.empty());
    } while (next_subgraph(h));
  }
}

TEST_CASE("malformed edge commitments are rejected, not decoded") {
  Graph g = make_complete(2);
  SecretPlacement blank(3);
  for (std::vector<Suit> bad : {std::vector<Suit>{Suit::Club, Suit::Club},
                                std::vector<Suit>{Suit::Heart, Suit::Heart}}) {
    VerdictSweep vs = sweep_verdicts(spanning_scripted_run(g, {bad}, {blank}));
    CHECK_FALSE(vs.verdict.accepted);
  }
}

TEST_CASE("claiming a path the commitment does not back is rejected") {
  // H = {1-2} only: vertex 3 is cut off. The prover scripts value-0
  // sequences everywhere, pretending each round's path exists.
  Graph g = make_path(3);
  int k = g.max_degree() + 3;
  std::vector<std::vector<Suit>> commitment = {encode_pattern(1, 2),
                                               encode_pattern(0, 2)};
  SecretPlacement zeros(4);
  for (int v = 1; v <= 3; ++v) zeros[static_cast<size_t>(v)] = encode_pattern(0, k);
  VerdictSweep vs =
      sweep_verdicts(spanning_scripted_run(g, commitment, {zeros, zeros}));
  CHECK_FALSE(vs.verdict.accepted);
}

TEST_CASE("free vertices cannot fake colors to pass a disconnected subgraph") {
  Graph g = make_path(3);
  int k = g.max_degree() + 3;
  std::vector<std::vector<Suit>> commitment = {encode_pattern(0, 2),
                                               encode_pattern(1, 2)};
  // Every single-vertex placement script for both rounds: none may pass,
  // because edge 1-2 is missing from H and round 1 needs it.
  for (int x1 = 0; x1 < k; ++x1) {
    for (int x2 = 0; x2 < k; ++x2) {
      SecretPlacement r1(4), r2(4);
      r1[2] = encode_pattern(x1, k);  // free vertex of round 1 (s=1,t=3)
      r2[1] = encode_pattern(x2, k);  // free vertex of round 2 (s=2,t=3)
      VerdictSweep vs = sweep_verdicts(spanning_scripted_run(g, commitment, {r1, r2}));
      CHECK_FALSE(vs.verdict.accepted);
    }
  }
}

TEST_CASE("peak card usage stays within the closed-form budget") {
  for (const Graph& g : {make_complete(2), make_path(3), make_complete(3), make_cycle(4),
                         Graph::parse("4 3\n1 2\n1 3\n1 4\n")}) {
    EdgeFlags full(static_cast<size_t>(g.edge_count()), true);
    RandomSource rng = RandomSource::seeded(11);
    Table table(rng);
    CHECK(verify_spanning_honest(g, full, table).accepted);
    CardBudget budget = card_budget(g);
    CHECK(table.usage().peak_encoding <= budget.encoding);
    CHECK(table.usage().peak_marking <= budget.marking);
    CHECK_EQ(table.usage().encoding_in_play, 0);
    CHECK_EQ(table.usage().marking_in_play, 0);
  }
}

TEST_CASE("an accepting run hands the commitment back intact") {
  Graph g = make_cycle(4);
  EdgeFlags h = parse_subgraph(g, "1 2\n2 3\n3 4\n");
  std::vector<int> coloring = greedy_coloring(g);
  RandomSource rng = RandomSource::seeded(4);
  Table table(rng, /*logging=*/false);
  SubgraphCommitment commitment = commit_subgraph(g, h, table);
  HonestSpanningProver prover(g, coloring, h);
  Verdict v = verify_connected_spanning(g, coloring, commitment, prover, table);
  CHECK(v.accepted);
  REQUIRE_EQ(commitment.b.size(), h.size());
  for (size_t e = 0; e < h.size(); ++e)
    CHECK_EQ(decode(commitment.b[e]) == 1, static_cast<bool>(h[e]));
}
