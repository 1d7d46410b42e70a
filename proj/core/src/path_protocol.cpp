#include "cardzk/path_protocol.hpp"

#include <utility>

#include "cardzk/subprotocols.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

namespace {

EdgeFlags full_edge_set(const Graph& g) {
  return EdgeFlags(static_cast<size_t>(g.edge_count()), true);
}

}  // namespace

SecretPlacement honest_path_placement(const Graph& g, const std::vector<int>& coloring,
                                      int s, int t) {
  EdgeFlags all = full_edge_set(g);
  std::vector<int> path = bfs_path(g, all, s, t);
  int k = g.max_degree() + 2;

  std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()) + 1, false);
  for (int v : path) on_path[static_cast<size_t>(v)] = true;

  SecretPlacement placement(static_cast<size_t>(g.vertex_count()) + 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (v == s || v == t) continue;
    int value = on_path[static_cast<size_t>(v)] ? 0 : coloring[static_cast<size_t>(v)];
    placement[static_cast<size_t>(v)] = encode_pattern(value, k);
  }
  return placement;
}

Verdict verify_path(const Graph& g, const std::vector<int>& coloring, int s, int t,
                    const SecretPlacement& placement, Table& table) {
  if (s == t || s < 1 || t < 1 || s > g.vertex_count() || t > g.vertex_count())
    throw ProtocolMisuse("verify_path: terminals must be two distinct vertices");
  int n = g.vertex_count();
  int k = g.max_degree() + 2;

  try {
    table.set_group("setup");
    std::vector<Sequence> a(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
      std::string vtag = "place.v" + std::to_string(v);
      if (v == s || v == t) {
        a[static_cast<size_t>(v)] = table.deal_public(0, k, vtag);
      } else {
        const std::vector<Suit>& pattern = placement.at(static_cast<size_t>(v));
        if (static_cast<int>(pattern.size()) != k)
          throw ProtocolMisuse("verify_path: placement has the wrong card count");
        a[static_cast<size_t>(v)] = table.deal_pattern(pattern);
      }
    }

    for (int v = 1; v <= n; ++v) {
      std::string vtag = "v" + std::to_string(v);
      table.set_group(vtag);
      const std::vector<int>& nbrs = g.neighbors(v);
      int rows = static_cast<int>(nbrs.size()) + 3;

      CardMatrix m(rows, k);
      m.place_row(0, std::move(a[static_cast<size_t>(v)]));
      for (size_t i = 0; i < nbrs.size(); ++i)
        m.place_row(1 + static_cast<int>(i), std::move(a[static_cast<size_t>(nbrs[i])]));
      int color = coloring[static_cast<size_t>(v)];
      m.place_row(rows - 2, table.deal_public(color, k, vtag + ".art.deal"));
      m.place_row(rows - 1, table.deal_public(color, k, vtag + ".art.deal"));

      int matches = neighbor_count(m, table, vtag + ".count");

      a[static_cast<size_t>(v)] = m.take_row(0);
      for (size_t i = 0; i < nbrs.size(); ++i)
        a[static_cast<size_t>(nbrs[i])] = m.take_row(1 + static_cast<int>(i));
      table.discard_hidden(m.take_row(rows - 2));
      table.discard_hidden(m.take_row(rows - 1));

      int expected = (v == s || v == t) ? 1 : 2;
      if (matches != expected)
        throw VerifierReject(vtag + ".count",
                             "expected " + std::to_string(expected) + " matching neighbors, saw " +
                                 std::to_string(matches));

      table.block_boundary(vtag, [&] {
        std::uint64_t h = 14695981039346656037ull;
        for (int w = 1; w <= n; ++w) {
          const std::string p = a[static_cast<size_t>(w)].pattern();
          h = fnv1a64(p.data(), p.size(), h);
        }
        return h;
      }());
    }

    for (int v = 1; v <= n; ++v) table.discard_hidden(std::move(a[static_cast<size_t>(v)]));
    return Verdict::accept();
  } catch (const VerifierReject& r) {
    return Verdict::reject(r.where(), r.why());
  }
}

}  // namespace cardzk
