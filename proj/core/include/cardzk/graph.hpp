#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cardzk {

// Simple undirected graph, vertices 1..n. Edges are stored in input
// order; subgraphs (the hidden H, prover-side) are flag vectors indexed
// the same way.
class Graph {
public:
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  // Text format: first line "n m", then m lines "u v", 1 <= u < v <= n.
  static Graph parse(const std::string& text);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int index) const;

  // Neighbor ids ascending.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const { return max_degree_; }
  // Index into edges() for {u,v}, or -1.
  int edge_index(int u, int v) const;

  std::string to_text() const;

private:
  Graph() = default;
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;  // 1-based
};

using EdgeFlags = std::vector<bool>;  // one flag per edge index

// Subgraph text format: one line "u v" per edge of H.
EdgeFlags parse_subgraph(const Graph& g, const std::string& text);
std::string subgraph_to_text(const Graph& g, const EdgeFlags& h);

// Proper coloring with colors 1..max_degree+1, vertices processed in
// ascending id, least unused color among already-colored neighbors.
// Index 0 unused.
std::vector<int> greedy_coloring(const Graph& g);
bool coloring_is_proper(const Graph& g, const std::vector<int>& color);

// True iff (V, H) is connected, i.e. H is a connected spanning subgraph.
bool oracle_connected_spanning(const Graph& g, const EdgeFlags& h);

// Per-vertex degree within H (index 0 unused).
std::vector<int> subgraph_degrees(const Graph& g, const EdgeFlags& h);

// Shortest s-t path inside H by BFS; empty if unreachable. A BFS path is
// already minimal (no chord can exist between BFS levels > 1 apart).
std::vector<int> bfs_path(const Graph& g, const EdgeFlags& h, int s, int t);

// Shortcuts chords until no non-consecutive pair of path vertices is
// H-adjacent. Throws std::domain_error if the input is not a valid path
// in H.
std::vector<int> minimalize_path(const Graph& g, const EdgeFlags& h, std::vector<int> path);
bool path_is_minimal(const Graph& g, const EdgeFlags& h, const std::vector<int>& path);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

}  // namespace cardzk
