#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cardzk/errors.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/path_protocol.hpp"
#include "cardzk/table.hpp"

namespace cardzk {

// Connected-spanning-subgraph verification: the prover commits the hidden
// subgraph H edge by edge, then proves v_i..v_n connectivity inside H for
// every i by a path round. Neighbor rows enter each vertex's counting
// matrix through an oblivious selection keyed on the edge commitment, so
// the verifier never learns which neighbors are H-neighbors. Modulus is
// d+3: value 0 marks the round's path, colors 1..d+1 mark off-path
// vertices, d+2 is the persistent blank.

struct SubgraphCommitment {
  std::vector<Sequence> b;  // per edge index of G, each over Z/2Z
};

// Honest commitment: E_2(1) on H's edges, E_2(0) elsewhere. No events.
SubgraphCommitment commit_subgraph(const Graph& g, const EdgeFlags& h, Table& table);
// Cheating commitment: arbitrary two-card patterns.
SubgraphCommitment commit_patterns(const Graph& g,
                                   const std::vector<std::vector<Suit>>& patterns,
                                   Table& table);

struct CardBudget {
  std::int64_t encoding = 0;
  std::int64_t marking = 0;
};

// Closed-form budget: encoding 2(d+3)(2n+2)+2d+2m, marking 2d+5. The
// engine's instrumented peak stays at or below these on every instance.
CardBudget card_budget(const Graph& g);

// Supplies the per-round secret placements (the protocol deals terminals
// publicly and ignores their entries).
class SpanningProver {
public:
  virtual ~SpanningProver() = default;
  virtual SecretPlacement round_placement(int round, int s, int t) = 0;
};

// Marks a minimal s-t path inside H with zeros, everything else with its
// color. With no s-t path in H (a lost cause), it still marks the path
// fragment reachable from s toward the farthest vertex, which is the
// best a prover could do.
class HonestSpanningProver final : public SpanningProver {
public:
  HonestSpanningProver(const Graph& g, std::vector<int> coloring, EdgeFlags h);
  SecretPlacement round_placement(int round, int s, int t) override;

private:
  const Graph* g_;
  std::vector<int> coloring_;
  EdgeFlags h_;
};

// Fixed script, one placement per round; for adversarial sweeps.
class ScriptedSpanningProver final : public SpanningProver {
public:
  explicit ScriptedSpanningProver(std::vector<SecretPlacement> rounds)
      : rounds_(std::move(rounds)) {}
  SecretPlacement round_placement(int round, int s, int t) override;

private:
  std::vector<SecretPlacement> rounds_;
};

// Runs the full protocol. The commitment is borrowed: on accept it is
// returned intact (applications keep using it); on reject it is partly
// consumed and must be discarded. tag_prefix namespaces all events and
// draw groups (the Bridges verifier runs this as its final phase).
Verdict verify_connected_spanning(const Graph& g, const std::vector<int>& coloring,
                                  SubgraphCommitment& commitment, SpanningProver& prover,
                                  Table& table, const std::string& tag_prefix = "");

// Honest end-to-end convenience: greedy coloring, honest commitment and
// prover, full run.
Verdict verify_spanning_honest(const Graph& g, const EdgeFlags& h, Table& table);

}  // namespace cardzk
