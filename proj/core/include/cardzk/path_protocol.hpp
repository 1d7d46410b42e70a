#pragma once

#include <string>
#include <vector>

#include "cardzk/errors.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/table.hpp"

namespace cardzk {

// s-t connectivity check over the whole graph: the prover secretly marks
// a minimal s-t path with value-0 sequences, every other vertex with its
// color, and the verifier counts value matches around every vertex
// (2 expected at non-terminals, 1 at terminals) over modulus d+2.

// The prover's secret placements, indexed by vertex id; entries for s and
// t are ignored (the verifier deals those publicly). Honest placement:
// E(0) on a minimal path's vertices, E(color) elsewhere. Cheating
// provers may supply arbitrary club/heart patterns.
using SecretPlacement = std::vector<std::vector<Suit>>;

SecretPlacement honest_path_placement(const Graph& g, const std::vector<int>& coloring,
                                      int s, int t);

Verdict verify_path(const Graph& g, const std::vector<int>& coloring, int s, int t,
                    const SecretPlacement& placement, Table& table);

}  // namespace cardzk
