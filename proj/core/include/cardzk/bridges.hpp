#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cardzk/errors.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/table.hpp"

namespace cardzk {

// Bridges (Hashiwokakero): islands on a grid, joined by straight
// horizontal/vertical bridges, at most two per island pair, bridges may
// not cross or pass through islands, each island's bridge count equals
// its number, and everything hangs together.
//
// The verifier never sees bridges, only lips: the unit segments between
// adjacent cells and along the outer boundary. b(lip) = number of
// bridges crossing it, committed as a 3-card sequence and publicly
// extended with six clubs into Z/9Z. Cell (r,c) is framed by horizontal
// lips above/below (indexed [r][c] / [r+1][c]) and vertical lips
// left/right ([r][c] / [r][c+1]).

struct BridgesInstance {
  int rows = 0;
  int cols = 0;
  std::vector<std::string> grid;  // '.' or '1'..'8'

  // Text: one line per row, equal lengths.
  static BridgesInstance parse(const std::string& text);
  std::string to_text() const;

  bool in_grid(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }
  bool is_island(int r, int c) const;
  int island_number(int r, int c) const;  // 0 when not an island
  std::vector<std::pair<int, int>> islands() const;  // scan order (row-major)
};

struct Bridge {
  int r1 = 0, c1 = 0;  // 0-based endpoints, (r1,c1) lexicographically first
  int r2 = 0, c2 = 0;
  int multiplicity = 0;  // 1 or 2
};

struct BridgesSolution {
  std::vector<Bridge> bridges;

  // Text: one line per bridge, "r1 c1 r2 c2 mult", 1-based coordinates.
  // Zero-multiplicity lines are dropped; duplicate pairs are an error.
  static BridgesSolution parse(const std::string& text);
  std::string to_text() const;
};

// Ground-truth puzzle predicate: endpoints are islands in a straight
// line with no island or other bridge in the way, multiplicities 1..2,
// island sums exact, no cell crossed both ways, islands all connected.
bool solution_valid(const BridgesInstance& inst, const BridgesSolution& sol);

// Exhaustive solver over the island graph (the decision problem is
// NP-complete, so this is desk-scale only). Throws CapacityError beyond
// 16 islands.
std::optional<BridgesSolution> solve_bridges(const BridgesInstance& inst);

// Public structure graph: vertices are islands in scan order (1-based),
// edges join co-row/co-column islands with no island between.
Graph island_graph(const BridgesInstance& inst);

// Crossing counts per lip for a claimed solution (no validity assumed).
struct LipValues {
  std::vector<std::vector<int>> horizontal;  // (rows+1) x cols
  std::vector<std::vector<int>> vertical;    // rows x (cols+1)
};
LipValues lip_values(const BridgesInstance& inst, const BridgesSolution& sol);

// The card protocol: commit all lips, check boundary lips are zero,
// island sums match, bridges run straight and never cross, then extract
// a two-card commitment per island-graph edge from a witness lip and
// run the connected-spanning verification on the island graph.
// The solution is the prover's private witness; it must be structurally
// sane (in-grid, straight, multiplicities 1..2) or ProtocolMisuse is
// thrown. Semantic lies are the protocol's job and yield a reject.
Verdict verify_bridges(const BridgesInstance& inst, const BridgesSolution& sol, Table& table);

// The worked 7x7 instance (13 islands) and its drawn solution.
BridgesInstance example_instance();
BridgesSolution example_solution();

}  // namespace cardzk
