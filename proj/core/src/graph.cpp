#include "cardzk/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cardzk/errors.hpp"

namespace cardzk {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw ParseError("graph: need at least one vertex");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<size_t>(n) + 1, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("graph: vertex id out of range");
    if (u == v) throw ParseError("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ParseError("graph: duplicate edge");
    g.edges_.emplace_back(u, v);
    g.adjacency_[static_cast<size_t>(u)].push_back(v);
    g.adjacency_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nbrs.size()));
  }
  return g;
}

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("graph: expected header \"n m\"");
  if (m < 0) throw ParseError("graph: negative edge count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("graph: expected " + std::to_string(m) + " edges");
    if (u >= v) throw ParseError("graph: edges must be listed as u v with u < v");
    edges.emplace_back(u, v);
  }
  int extra = 0;
  if (in >> extra) throw ParseError("graph: trailing data after edge list");
  return from_edges(n, std::move(edges));
}

const std::pair<int, int>& Graph::edge(int index) const {
  return edges_.at(static_cast<size_t>(index));
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::domain_error("graph: vertex id out of range");
  return adjacency_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i] == std::pair<int, int>{u, v}) return static_cast<int>(i);
  return -1;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

EdgeFlags parse_subgraph(const Graph& g, const std::string& text) {
  EdgeFlags h(static_cast<size_t>(g.edge_count()), false);
  std::istringstream in(text);
  int u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("subgraph: malformed edge line");
    int idx = g.edge_index(u, v);
    if (idx < 0)
      throw ParseError("subgraph: edge " + std::to_string(u) + " " + std::to_string(v) +
                       " is not in the graph");
    if (h[static_cast<size_t>(idx)]) throw ParseError("subgraph: duplicate edge");
    h[static_cast<size_t>(idx)] = true;
  }
  if (!in.eof()) throw ParseError("subgraph: malformed edge line");
  return h;
}

std::string subgraph_to_text(const Graph& g, const EdgeFlags& h) {
  std::ostringstream out;
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i]) out << g.edge(static_cast<int>(i)).first << ' '
                  << g.edge(static_cast<int>(i)).second << '\n';
  return out.str();
}

std::vector<int> greedy_coloring(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::vector<bool> used(static_cast<size_t>(g.max_degree()) + 2, false);
    for (int u : g.neighbors(v))
      if (color[static_cast<size_t>(u)] > 0) used[static_cast<size_t>(color[static_cast<size_t>(u)])] = true;
    int c = 1;
    while (used[static_cast<size_t>(c)]) ++c;
    color[static_cast<size_t>(v)] = c;
  }
  return color;
}

bool coloring_is_proper(const Graph& g, const std::vector<int>& color) {
  for (auto [u, v] : g.edges())
    if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) return false;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int c = color[static_cast<size_t>(v)];
    if (c < 1 || c > g.max_degree() + 1) return false;
  }
  return true;
}

namespace {
void check_subgraph_shape(const Graph& g, const EdgeFlags& h) {
  if (static_cast<int>(h.size()) != g.edge_count())
    throw std::domain_error("subgraph flags must match the graph's edge count");
}

bool h_adjacent(const Graph& g, const EdgeFlags& h, int u, int v) {
  int idx = g.edge_index(u, v);
  return idx >= 0 && h[static_cast<size_t>(idx)];
}
}  // namespace

bool oracle_connected_spanning(const Graph& g, const EdgeFlags& h) {
  check_subgraph_shape(g, h);
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) parent[static_cast<size_t>(v)] = v;
  auto find = [&parent](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  int components = n;
  for (size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) continue;
    auto [u, v] = g.edge(static_cast<int>(i));
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<size_t>(ru)] = rv;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> subgraph_degrees(const Graph& g, const EdgeFlags& h) {
  check_subgraph_shape(g, h);
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) continue;
    ++deg[static_cast<size_t>(g.edge(static_cast<int>(i)).first)];
    ++deg[static_cast<size_t>(g.edge(static_cast<int>(i)).second)];
  }
  return deg;
}

std::vector<int> bfs_path(const Graph& g, const EdgeFlags& h, int s, int t) {
  check_subgraph_shape(g, h);
  std::vector<int> prev(static_cast<size_t>(g.vertex_count()) + 1, 0);
  std::queue<int> frontier;
  frontier.push(s);
  prev[static_cast<size_t>(s)] = s;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    if (v == t) break;
    for (int u : g.neighbors(v)) {
      if (prev[static_cast<size_t>(u)] != 0 || !h_adjacent(g, h, v, u)) continue;
      prev[static_cast<size_t>(u)] = v;
      frontier.push(u);
    }
  }
  if (prev[static_cast<size_t>(t)] == 0) return {};
  std::vector<int> path;
  for (int v = t; v != s; v = prev[static_cast<size_t>(v)]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {
void check_path_valid(const Graph& g, const EdgeFlags& h, const std::vector<int>& path) {
  if (path.empty()) throw std::domain_error("path: empty");
  std::set<int> seen;
  for (int v : path) {
    if (v < 1 || v > g.vertex_count()) throw std::domain_error("path: vertex out of range");
    if (!seen.insert(v).second) throw std::domain_error("path: repeated vertex");
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!h_adjacent(g, h, path[i], path[i + 1]))
      throw std::domain_error("path: consecutive vertices not adjacent in H");
}
}  // namespace

bool path_is_minimal(const Graph& g, const EdgeFlags& h, const std::vector<int>& path) {
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 2; j < path.size(); ++j)
      if (h_adjacent(g, h, path[i], path[j])) return false;
  return true;
}

std::vector<int> minimalize_path(const Graph& g, const EdgeFlags& h, std::vector<int> path) {
  check_path_valid(g, h, path);
  std::vector<int> out;
  size_t i = 0;
  while (i < path.size()) {
    out.push_back(path[i]);
    // Jump to the farthest later vertex still adjacent to path[i].
    size_t next = i + 1;
    for (size_t j = path.size(); j-- > i + 1;) {
      if (h_adjacent(g, h, path[i], path[j])) {
        next = j;
        break;
      }
    }
    if (next >= path.size()) break;
    i = next;
  }
  return out;
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(1, n);
  return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace cardzk
