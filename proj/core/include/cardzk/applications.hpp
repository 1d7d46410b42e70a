#pragma once

#include <vector>

#include "cardzk/spanning.hpp"

namespace cardzk {

// A pile of face-down cards whose order carries no information. The
// prover may inspect the contents privately (no transcript event);
// opening publicly goes through Table::turn_over like any reveal.
struct Envelope {
  std::vector<Card> cards;
};

// Hamiltonian cycle: connected spanning plus degree exactly 2 everywhere.
// After the spanning phase each edge commitment is copied once so both
// endpoints get a sequence; the leftmost card of E_2(b) is a club exactly
// when b=1, so a scrambled per-vertex pile of leftmost cards shows
// deg_H(v) clubs and nothing else.
Verdict verify_hamiltonian(const Graph& g, const std::vector<int>& coloring,
                           const EdgeFlags& h, Table& table);

// Maximum-leaf spanning subgraph: connected spanning plus at least
// `leaves` vertices of degree 1. Per-vertex piles are padded with public
// hearts to exactly d cards and sealed into envelopes, the envelopes are
// scrambled together, and the prover publicly opens exactly those
// containing a single club.
Verdict verify_max_leaf(const Graph& g, const std::vector<int>& coloring, int leaves,
                        const EdgeFlags& h, Table& table);

}  // namespace cardzk
