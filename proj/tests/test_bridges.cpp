#include <optional>
#include <vector>

#include "cardzk/bridges.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/table.hpp"
#include "cardzk/zk_audit.hpp"
#include "doctest.h"

using namespace cardzk;

TEST_CASE("grid parsing reads islands and rejects malformed grids") {
  BridgesInstance inst = BridgesInstance::parse(".2.\n2.2\n.2.\n");
  CHECK_EQ(inst.rows, 3);
  CHECK_EQ(inst.cols, 3);
  CHECK(inst.is_island(0, 1));
  CHECK_FALSE(inst.is_island(1, 1));
  CHECK_EQ(inst.island_number(2, 1), 2);
  CHECK_EQ(inst.island_number(1, 1), 0);
  CHECK_EQ(inst.islands().size(), 4u);
  CHECK_EQ(inst.islands().front(), std::pair<int, int>{0, 1});

  CHECK_THROWS_AS(BridgesInstance::parse(""), ParseError);
  CHECK_THROWS_AS(BridgesInstance::parse("22\n2\n"), ParseError);
  CHECK_THROWS_AS(BridgesInstance::parse("29\n"), ParseError);
  CHECK_THROWS_AS(BridgesInstance::parse("2x\n"), ParseError);
}

TEST_CASE("solution parsing normalizes bridges and rejects bad lines") {
  BridgesSolution sol = BridgesSolution::parse("1 2 1 1 2\n\n2 1 2 3 0\n");
  REQUIRE_EQ(sol.bridges.size(), 1u);  // zero multiplicity dropped
  const Bridge& b = sol.bridges[0];
  CHECK_EQ(b.r1, 0);
  CHECK_EQ(b.c1, 0);  // endpoints swapped into order
  CHECK_EQ(b.r2, 0);
  CHECK_EQ(b.c2, 1);
  CHECK_EQ(b.multiplicity, 2);

  CHECK_THROWS_AS(BridgesSolution::parse("1 1 1 2\n"), ParseError);
  CHECK_THROWS_AS(BridgesSolution::parse("1 1 1 2 1 9\n"), ParseError);
  CHECK_THROWS_AS(BridgesSolution::parse("0 1 0 2 1\n"), ParseError);
  CHECK_THROWS_AS(BridgesSolution::parse("1 1 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(BridgesSolution::parse("1 1 2 2 1\n"), ParseError);   // diagonal
  CHECK_THROWS_AS(BridgesSolution::parse("1 1 1 1 1\n"), ParseError);   // loop
  CHECK_THROWS_AS(BridgesSolution::parse("1 1 1 2 1\n1 2 1 1 1\n"), ParseError);
}

TEST_CASE("lip values count bridge crossings including island lips") {
  BridgesInstance inst = BridgesInstance::parse("22\n");
  BridgesSolution sol = BridgesSolution::parse("1 1 1 2 2\n");
  LipValues lv = lip_values(inst, sol);
  CHECK_EQ(lv.vertical[0], std::vector<int>{0, 2, 0});
  CHECK_EQ(lv.horizontal[0], std::vector<int>{0, 0});
  CHECK_EQ(lv.horizontal[1], std::vector<int>{0, 0});

  BridgesInstance tall = BridgesInstance::parse("2\n.\n2\n");
  LipValues lv2 = lip_values(tall, BridgesSolution::parse("1 1 3 1 2\n"));
  CHECK_EQ(lv2.horizontal[1], std::vector<int>{2});
  CHECK_EQ(lv2.horizontal[2], std::vector<int>{2});
  CHECK_EQ(lv2.horizontal[0], std::vector<int>{0});
  CHECK_EQ(lv2.horizontal[3], std::vector<int>{0});
}

TEST_CASE("the ground-truth predicate accepts exactly the real solutions") {
  BridgesInstance two = BridgesInstance::parse("22\n");
  CHECK(solution_valid(two, BridgesSolution::parse("1 1 1 2 2\n")));
  CHECK_FALSE(solution_valid(two, BridgesSolution::parse("1 1 1 2 1\n")));
  CHECK_FALSE(solution_valid(two, BridgesSolution::parse("")));

  // A bridge may span empty cells but not pass through an island.
  BridgesInstance gap = BridgesInstance::parse("2.2\n");
  CHECK(solution_valid(gap, BridgesSolution::parse("1 1 1 3 2\n")));
  BridgesInstance row = BridgesInstance::parse("212\n");
  BridgesSolution through = BridgesSolution::parse("1 1 1 3 2\n");
  CHECK_FALSE(solution_valid(row, through));

  // Crossing at the center cell (sums would be fine).
  BridgesInstance plus = BridgesInstance::parse(".2.\n2.2\n.2.\n");
  BridgesSolution crossed = BridgesSolution::parse("1 2 3 2 2\n2 1 2 3 2\n");
  CHECK_FALSE(solution_valid(plus, crossed));

  CHECK(solution_valid(example_instance(), example_solution()));
}

TEST_CASE("the island graph joins colinear islands with clear sight lines") {
  Graph two = island_graph(BridgesInstance::parse("22\n"));
  CHECK_EQ(two.vertex_count(), 2);
  CHECK_EQ(two.edge_count(), 1);

  Graph row = island_graph(BridgesInstance::parse("212\n"));
  CHECK_EQ(row.vertex_count(), 3);
  CHECK_EQ(row.edge_count(), 2);
  CHECK_EQ(row.edge_index(1, 3), -1);  // the middle island blocks the span

  Graph fig = island_graph(example_instance());
  CHECK_EQ(fig.vertex_count(), 13);
  CHECK(fig.edge_count() >= 13);
}

TEST_CASE("the exhaustive solver finds real solutions and knows dead ends") {
  std::optional<BridgesSolution> two = solve_bridges(BridgesInstance::parse("22\n"));
  REQUIRE(two.has_value());
  CHECK(solution_valid(BridgesInstance::parse("22\n"), *two));

  CHECK_FALSE(solve_bridges(BridgesInstance::parse("13\n")).has_value());
  CHECK_FALSE(solve_bridges(BridgesInstance::parse(".2.\n2.2\n.2.\n")).has_value());

  std::optional<BridgesSolution> fig = solve_bridges(example_instance());
  REQUIRE(fig.has_value());
  CHECK(solution_valid(example_instance(), *fig));
}

TEST_CASE("honest bridges runs accept on every enumerated leaf") {
  BridgesInstance inst = BridgesInstance::parse("22\n");
  BridgesSolution sol = BridgesSolution::parse("1 1 1 2 2\n");
  VerdictSweep vs = sweep_verdicts(bridges_run(inst, sol));
  CHECK(vs.verdict.accepted);
  CHECK(vs.total_runs > 1);
}

TEST_CASE("wrong multiplicities fail the island sum on every leaf") {
  BridgesInstance inst = BridgesInstance::parse("22\n");
  BridgesSolution sol = BridgesSolution::parse("1 1 1 2 1\n");
  VerdictSweep vs = sweep_verdicts(bridges_run(inst, sol));
  CHECK_FALSE(vs.verdict.accepted);
  CHECK_FALSE(vs.verdict.where.empty());
}

TEST_CASE("a crossing witness fails the noncrossing product check") {
  BridgesInstance inst = BridgesInstance::parse(".2.\n2.2\n.2.\n");
  BridgesSolution crossed = BridgesSolution::parse("1 2 3 2 2\n2 1 2 3 2\n");
  VerdictSweep vs = sweep_verdicts(bridges_run(inst, crossed));
  CHECK_FALSE(vs.verdict.accepted);
}

TEST_CASE("a structurally impossible witness is engine misuse, not a verdict") {
  BridgesInstance inst = BridgesInstance::parse("22\n");
  BridgesSolution diagonal;
  diagonal.bridges.push_back(Bridge{0, 0, 1, 1, 1});
  RandomSource rng = RandomSource::seeded(2);
  Table table(rng, /*logging=*/false);
  CHECK_THROWS_AS(verify_bridges(inst, diagonal, table), ProtocolMisuse);
}

TEST_CASE("the worked 7x7 example verifies and single edits break it") {
  BridgesInstance inst = example_instance();
  BridgesSolution sol = example_solution();
  RandomSource rng = RandomSource::seeded(0);
  Table table(rng);
  CHECK(verify_bridges(inst, sol, table).accepted);

  // Drop one bridge: two island sums go short.
  BridgesSolution missing = sol;
  missing.bridges.pop_back();
  RandomSource rng2 = RandomSource::seeded(1);
  Table t2(rng2, /*logging=*/false);
  CHECK_FALSE(verify_bridges(inst, missing, t2).accepted);

  // Thicken one bridge: sums go long.
  BridgesSolution doubled = sol;
  for (Bridge& b : doubled.bridges)
    if (b.multiplicity == 1) {
      b.multiplicity = 2;
      break;
    }
  RandomSource rng3 = RandomSource::seeded(2);
  Table t3(rng3, /*logging=*/false);
  CHECK_FALSE(verify_bridges(inst, doubled, t3).accepted);
}
