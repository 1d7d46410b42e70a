#include <vector>

#include "cardzk/graph.hpp"
#include "cardzk/path_protocol.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/table.hpp"
#include "cardzk/zk_audit.hpp"
#include "doctest.h"

using namespace cardzk;

namespace {

// Factored sweep: every leaf of every shuffle factor must agree on the
// verdict (the sweep itself throws otherwise); returns that verdict.
bool sweep(const Graph& g, int s, int t, const SecretPlacement& placement) {
  std::vector<int> coloring = greedy_coloring(g);
  VerdictSweep vs = sweep_verdicts([&](Table& table) {
    return verify_path(g, coloring, s, t, placement, table);
  });
  CHECK(vs.total_runs > 1);
  return vs.verdict.accepted;
}

SecretPlacement honest(const Graph& g, int s, int t) {
  return honest_path_placement(g, greedy_coloring(g), s, t);
}

}  // namespace

TEST_CASE("honest placement accepts on every jointly enumerated outcome") {
  Graph g = make_path(3);
  std::vector<int> coloring = greedy_coloring(g);
  SecretPlacement p = honest_path_placement(g, coloring, 1, 3);
  OutcomeEnumerator::Options opts;
  opts.fidelity = RandomSource::Fidelity::Verdict;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        Table table(rng, /*logging=*/false);
        CHECK(verify_path(g, coloring, 1, 3, p, table).accepted);
      },
      opts);
  CHECK(leaves > 1);
}

TEST_CASE("honest path placements accept on connected graphs") {
  for (const Graph& g : {make_path(4), make_cycle(4), make_complete(4)}) {
    int n = g.vertex_count();
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t)
        if (s != t) CHECK(sweep(g, s, t, honest(g, s, t)));
  }
}

TEST_CASE("terminal entries in the placement are ignored") {
  Graph g = make_path(3);
  SecretPlacement p = honest(g, 1, 3);
  p[1] = {Suit::Heart, Suit::Heart, Suit::Heart, Suit::Heart};
  p[3] = {};
  CHECK(sweep(g, 1, 3, p));
}

TEST_CASE("an unreachable terminal is always rejected") {
  Graph g = Graph::parse("4 2\n1 2\n3 4\n");
  CHECK_FALSE(sweep(g, 1, 3, honest(g, 1, 3)));
}

TEST_CASE("marking a non-minimal path is always rejected") {
  // In K_3 the walk 1-2-3 has the chord 1-3; terminal 1 then counts two
  // zero neighbors instead of one.
  Graph g = make_complete(3);
  std::vector<int> coloring = greedy_coloring(g);
  SecretPlacement p = honest_path_placement(g, coloring, 1, 3);
  p[2] = encode_pattern(0, g.max_degree() + 2);  // force 2 onto the "path"
  CHECK_FALSE(sweep(g, 1, 3, p));
}

TEST_CASE("marking a broken path is always rejected") {
  Graph g = make_path(3);
  std::vector<int> coloring = greedy_coloring(g);
  SecretPlacement p = honest_path_placement(g, coloring, 1, 3);
  // The middle vertex shows its color instead of 0: both terminals lose
  // their only matching neighbor.
  p[2] = encode_pattern(coloring[2], g.max_degree() + 2);
  CHECK_FALSE(sweep(g, 1, 3, p));
}

TEST_CASE("a placement with no heart is rejected, not an engine error") {
  Graph g = make_path(3);
  std::vector<int> coloring = greedy_coloring(g);
  SecretPlacement p = honest_path_placement(g, coloring, 1, 3);
  p[2] = std::vector<Suit>(static_cast<size_t>(g.max_degree()) + 2, Suit::Club);
  RandomSource rng = RandomSource::seeded(3);
  Table table(rng, /*logging=*/false);
  Verdict v = verify_path(g, coloring, 1, 3, p, table);
  CHECK_FALSE(v.accepted);
  CHECK_FALSE(v.where.empty());
  CHECK_FALSE(v.why.empty());
}

TEST_CASE("wrong placement length is engine misuse") {
  Graph g = make_path(3);
  std::vector<int> coloring = greedy_coloring(g);
  SecretPlacement p = honest_path_placement(g, coloring, 1, 3);
  p[2] = {Suit::Heart, Suit::Club};
  RandomSource rng = RandomSource::seeded(3);
  Table table(rng, /*logging=*/false);
  CHECK_THROWS_AS(verify_path(g, coloring, 1, 3, p, table), ProtocolMisuse);
}
