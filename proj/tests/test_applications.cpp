#include <vector>

#include "cardzk/applications.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/random_source.hpp"
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

bool is_hamiltonian_cycle(const Graph& g, const EdgeFlags& h) {
  if (!oracle_connected_spanning(g, h)) return false;
  std::vector<int> deg = subgraph_degrees(g, h);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] != 2) return false;
  return true;
}

int leaf_count(const Graph& g, const EdgeFlags& h) {
  std::vector<int> deg = subgraph_degrees(g, h);
  int leaves = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] == 1) ++leaves;
  return leaves;
}

}  // namespace

TEST_CASE("hamiltonian verdict equals the 2-regular connected predicate") {
  for (const Graph& g : {make_complete(3), make_cycle(4)}) {
    EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
    do {
      VerdictSweep vs = sweep_verdicts(hamiltonian_run(g, h));
      CHECK_EQ(vs.verdict.accepted, is_hamiltonian_cycle(g, h));
    } while (next_subgraph(h));
  }
}

TEST_CASE("max-leaf verdict equals connected-spanning with enough leaves") {
  for (const Graph& g : {make_path(3), make_complete(3)}) {
    EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
    do {
      bool spanning = oracle_connected_spanning(g, h);
      int leaves = leaf_count(g, h);
      for (int k = 0; k <= g.vertex_count(); ++k) {
        VerdictSweep vs = sweep_verdicts(max_leaf_run(g, k, h));
        CHECK_EQ(vs.verdict.accepted, spanning && leaves >= k);
      }
    } while (next_subgraph(h));
  }
}

TEST_CASE("a spanning tree of the star graph has the most leaves possible") {
  Graph g = Graph::parse("4 3\n1 2\n1 3\n1 4\n");
  EdgeFlags h(3, true);
  CHECK(sweep_verdicts(max_leaf_run(g, 3, h)).verdict.accepted);
  CHECK_FALSE(sweep_verdicts(max_leaf_run(g, 4, h)).verdict.accepted);
}

TEST_CASE("application runs stay within the card budget and clean the table") {
  Graph g = make_complete(4);
  EdgeFlags cycle(static_cast<size_t>(g.edge_count()), false);
  cycle[static_cast<size_t>(g.edge_index(1, 2))] = true;
  cycle[static_cast<size_t>(g.edge_index(2, 3))] = true;
  cycle[static_cast<size_t>(g.edge_index(3, 4))] = true;
  cycle[static_cast<size_t>(g.edge_index(1, 4))] = true;
  CardBudget budget = card_budget(g);

  RandomSource rng = RandomSource::seeded(9);
  Table table(rng);
  CHECK(verify_hamiltonian(g, greedy_coloring(g), cycle, table).accepted);
  CHECK(table.usage().peak_encoding <= budget.encoding);
  CHECK(table.usage().peak_marking <= budget.marking);
  CHECK_EQ(table.usage().encoding_in_play, 0);
  CHECK_EQ(table.usage().marking_in_play, 0);

  RandomSource rng2 = RandomSource::seeded(10);
  Table table2(rng2);
  EdgeFlags path(static_cast<size_t>(g.edge_count()), false);
  path[static_cast<size_t>(g.edge_index(1, 2))] = true;
  path[static_cast<size_t>(g.edge_index(2, 3))] = true;
  path[static_cast<size_t>(g.edge_index(3, 4))] = true;
  CHECK(verify_max_leaf(g, greedy_coloring(g), 2, path, table2).accepted);
  CHECK(table2.usage().peak_encoding <= budget.encoding);
  CHECK(table2.usage().peak_marking <= budget.marking);
  CHECK_EQ(table2.usage().encoding_in_play, 0);
  CHECK_EQ(table2.usage().marking_in_play, 0);
}

TEST_CASE("hamiltonian rejection names the failing check") {
  Graph g = make_complete(3);
  EdgeFlags h = parse_subgraph(g, "1 2\n2 3\n");  // path, not a cycle
  VerdictSweep vs = sweep_verdicts(hamiltonian_run(g, h));
  CHECK_FALSE(vs.verdict.accepted);
  CHECK_FALSE(vs.verdict.where.empty());
  CHECK_FALSE(vs.verdict.why.empty());
}
