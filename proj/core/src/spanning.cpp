#include "cardzk/spanning.hpp"

#include <cstddef>
#include <queue>
#include <utility>

#include "cardzk/subprotocols.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

namespace {

// Farthest-from-s vertex reachable inside H (smallest id on ties).
int farthest_reachable(const Graph& g, const EdgeFlags& h, int s) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()) + 1, -1);
  std::queue<int> q;
  dist[static_cast<size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (g.edge_index(v, u) < 0 || !h[static_cast<size_t>(g.edge_index(v, u))]) continue;
      if (dist[static_cast<size_t>(u)] >= 0) continue;
      dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
      q.push(u);
    }
  }
  int best = s;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (dist[static_cast<size_t>(v)] > dist[static_cast<size_t>(best)]) best = v;
  return best;
}

std::uint64_t state_digest(const SubgraphCommitment& commitment,
                           const std::vector<Sequence>& a0, const std::vector<Sequence>& a1) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const Sequence& s) {
    const std::string p = s.empty() ? std::string("-") : s.pattern();
    h = fnv1a64(p.data(), p.size(), h);
  };
  for (const Sequence& s : commitment.b) mix(s);
  for (const Sequence& s : a0) mix(s);
  for (const Sequence& s : a1) mix(s);
  return h;
}

}  // namespace

SubgraphCommitment commit_subgraph(const Graph& g, const EdgeFlags& h, Table& table) {
  if (static_cast<int>(h.size()) != g.edge_count())
    throw ProtocolMisuse("commit_subgraph: flag count does not match the edge count");
  SubgraphCommitment c;
  c.b.reserve(h.size());
  for (int e = 0; e < g.edge_count(); ++e)
    c.b.push_back(table.deal_encoding(h[static_cast<size_t>(e)] ? 1 : 0, 2));
  return c;
}

SubgraphCommitment commit_patterns(const Graph& g,
                                   const std::vector<std::vector<Suit>>& patterns,
                                   Table& table) {
  if (static_cast<int>(patterns.size()) != g.edge_count())
    throw ProtocolMisuse("commit_patterns: pattern count does not match the edge count");
  SubgraphCommitment c;
  c.b.reserve(patterns.size());
  for (const std::vector<Suit>& p : patterns) {
    if (p.size() != 2)
      throw ProtocolMisuse("commit_patterns: edge commitments are two-card sequences");
    c.b.push_back(table.deal_pattern(p));
  }
  return c;
}

CardBudget card_budget(const Graph& g) {
  std::int64_t n = g.vertex_count();
  std::int64_t m = g.edge_count();
  std::int64_t d = g.max_degree();
  CardBudget budget;
  budget.encoding = 2 * (d + 3) * (2 * n + 2) + 2 * d + 2 * m;
  budget.marking = 2 * d + 5;
  return budget;
}

HonestSpanningProver::HonestSpanningProver(const Graph& g, std::vector<int> coloring,
                                           EdgeFlags h)
    : g_(&g), coloring_(std::move(coloring)), h_(std::move(h)) {}

SecretPlacement HonestSpanningProver::round_placement(int round, int s, int t) {
  (void)round;
  const Graph& g = *g_;
  std::vector<int> path = bfs_path(g, h_, s, t);
  if (path.empty()) path = bfs_path(g, h_, s, farthest_reachable(g, h_, s));
  int k = g.max_degree() + 3;

  std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()) + 1, false);
  for (int v : path) on_path[static_cast<size_t>(v)] = true;

  SecretPlacement placement(static_cast<size_t>(g.vertex_count()) + 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (v == s || v == t) continue;
    int value = on_path[static_cast<size_t>(v)] ? 0 : coloring_[static_cast<size_t>(v)];
    placement[static_cast<size_t>(v)] = encode_pattern(value, k);
  }
  return placement;
}

SecretPlacement ScriptedSpanningProver::round_placement(int round, int s, int t) {
  (void)s;
  (void)t;
  return rounds_.at(static_cast<size_t>(round) - 1);
}

Verdict verify_connected_spanning(const Graph& g, const std::vector<int>& coloring,
                                  SubgraphCommitment& commitment, SpanningProver& prover,
                                  Table& table, const std::string& tag_prefix) {
  int n = g.vertex_count();
  int k = g.max_degree() + 3;
  if (static_cast<int>(commitment.b.size()) != g.edge_count())
    throw ProtocolMisuse("verify_connected_spanning: commitment size mismatch");
  for (const Sequence& b : commitment.b)
    if (b.modulus() != 2 || !b.all_down())
      throw ProtocolMisuse("verify_connected_spanning: commitments must be two face-down cards");

  try {
    table.set_group(tag_prefix + "setup");
    std::vector<Sequence> a0(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v)
      a0[static_cast<size_t>(v)] =
          table.deal_public(k - 1, k, tag_prefix + "blank.v" + std::to_string(v));

    for (int round = 1; round <= n - 1; ++round) {
      int s = round;
      int t = n;
      std::string rtag = tag_prefix + "r" + std::to_string(round);

      table.set_group(rtag + ".place");
      SecretPlacement placement = prover.round_placement(round, s, t);
      std::vector<Sequence> a1(static_cast<size_t>(n) + 1);
      for (int v = 1; v <= n; ++v) {
        if (v == s || v == t) {
          a1[static_cast<size_t>(v)] =
              table.deal_public(0, k, rtag + ".place.v" + std::to_string(v));
        } else {
          const std::vector<Suit>& pattern = placement.at(static_cast<size_t>(v));
          if (static_cast<int>(pattern.size()) != k)
            throw ProtocolMisuse("verify_connected_spanning: placement has the wrong card count");
          a1[static_cast<size_t>(v)] = table.deal_pattern(pattern);
        }
      }

      for (int v = 1; v <= n; ++v) {
        std::string vtag = rtag + ".v" + std::to_string(v);
        table.set_group(vtag);
        const std::vector<int>& nbrs = g.neighbors(v);

        // Pull each neighbor's round row through the commitment-keyed
        // selection: b(e)=1 routes a1[u] into the count, b(e)=0 the blank.
        std::vector<SelectionContext> selections;
        selections.reserve(nbrs.size());
        std::vector<Sequence> picked;
        picked.reserve(nbrs.size());
        for (int u : nbrs) {
          int e = g.edge_index(v, u);
          std::vector<Sequence> cands;
          cands.push_back(std::move(a0[static_cast<size_t>(u)]));
          cands.push_back(std::move(a1[static_cast<size_t>(u)]));
          auto [pick, ctx] =
              select_sequence(std::move(cands), std::move(commitment.b[static_cast<size_t>(e)]),
                              table, vtag + ".nb" + std::to_string(u));
          picked.push_back(std::move(pick));
          selections.push_back(std::move(ctx));
        }

        int rows = static_cast<int>(nbrs.size()) + 3;
        CardMatrix m(rows, k);
        m.place_row(0, std::move(a1[static_cast<size_t>(v)]));
        for (size_t i = 0; i < picked.size(); ++i)
          m.place_row(1 + static_cast<int>(i), std::move(picked[i]));
        int color = coloring[static_cast<size_t>(v)];
        m.place_row(rows - 2, table.deal_public(color, k, vtag + ".art.deal"));
        m.place_row(rows - 1, table.deal_public(color, k, vtag + ".art.deal"));

        int matches = neighbor_count(m, table, vtag + ".count");

        a1[static_cast<size_t>(v)] = m.take_row(0);
        for (size_t i = 0; i < selections.size(); ++i)
          selections[i].put_back(m.take_row(1 + static_cast<int>(i)));
        table.discard_hidden(m.take_row(rows - 2));
        table.discard_hidden(m.take_row(rows - 1));

        for (size_t i = 0; i < selections.size(); ++i) {
          restore_selection(selections[i], table);
          int u = nbrs[i];
          int e = g.edge_index(v, u);
          commitment.b[static_cast<size_t>(e)] = selections[i].take_selector();
          std::vector<Sequence> cands = selections[i].take_candidates();
          a0[static_cast<size_t>(u)] = std::move(cands[0]);
          a1[static_cast<size_t>(u)] = std::move(cands[1]);
        }

        int expected = (v == s || v == t) ? 1 : 2;
        if (matches != expected)
          throw VerifierReject(vtag + ".count",
                               "expected " + std::to_string(expected) +
                                   " matching neighbors, saw " + std::to_string(matches));

        table.block_boundary(vtag, state_digest(commitment, a0, a1));
      }

      table.set_group(rtag + ".collect");
      for (int v = 1; v <= n; ++v)
        table.discard_hidden(std::move(a1[static_cast<size_t>(v)]));
    }

    table.set_group(tag_prefix + "teardown");
    for (int v = 1; v <= n; ++v)
      table.discard_hidden(std::move(a0[static_cast<size_t>(v)]));
    return Verdict::accept();
  } catch (const VerifierReject& r) {
    return Verdict::reject(r.where(), r.why());
  }
}

Verdict verify_spanning_honest(const Graph& g, const EdgeFlags& h, Table& table) {
  std::vector<int> coloring = greedy_coloring(g);
  SubgraphCommitment commitment = commit_subgraph(g, h, table);
  HonestSpanningProver prover(g, coloring, h);
  Verdict verdict = verify_connected_spanning(g, coloring, commitment, prover, table);
  if (verdict.accepted)
    for (Sequence& b : commitment.b) table.discard_hidden(std::move(b));
  return verdict;
}

}  // namespace cardzk
