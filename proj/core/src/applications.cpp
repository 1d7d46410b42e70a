#include "cardzk/applications.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "cardzk/shuffle.hpp"
#include "cardzk/subprotocols.hpp"

namespace cardzk {

namespace {

// Copy every commitment once and hand each endpoint of edge e one of the
// two resulting sequences (smaller endpoint gets [0]). Consumes the
// commitment.
std::vector<std::array<Sequence, 2>> copy_commitments(const Graph& g,
                                                      SubgraphCommitment& commitment,
                                                      Table& table,
                                                      const std::string& prefix) {
  std::vector<std::array<Sequence, 2>> halves(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<Sequence> out =
        copy_sequence(std::move(commitment.b[static_cast<size_t>(e)]), 1, table,
                      prefix + ".e" + std::to_string(e));
    halves[static_cast<size_t>(e)][0] = std::move(out[0]);
    halves[static_cast<size_t>(e)][1] = std::move(out[1]);
  }
  return halves;
}

// Gathers the leftmost card of v's sequence for every incident edge; the
// partner card leaves play face-down.
std::vector<Card> gather_leftmost(const Graph& g, int v,
                                  std::vector<std::array<Sequence, 2>>& halves,
                                  Table& table) {
  std::vector<Card> pile;
  for (int u : g.neighbors(v)) {
    int e = g.edge_index(v, u);
    Sequence& mine = halves[static_cast<size_t>(e)][v < u ? 0 : 1];
    std::vector<Card> cards = std::move(mine).release_cards();
    pile.push_back(std::move(cards[0]));
    table.release(std::move(cards[1]));
  }
  return pile;
}

}  // namespace

Verdict verify_hamiltonian(const Graph& g, const std::vector<int>& coloring,
                           const EdgeFlags& h, Table& table) {
  SubgraphCommitment commitment = commit_subgraph(g, h, table);
  HonestSpanningProver prover(g, coloring, h);
  Verdict spanning = verify_connected_spanning(g, coloring, commitment, prover, table, "span.");
  if (!spanning.accepted) return spanning;

  try {
    std::vector<std::array<Sequence, 2>> halves = copy_commitments(g, commitment, table, "deg");
    for (int v = 1; v <= g.vertex_count(); ++v) {
      std::string tag = "deg.v" + std::to_string(v);
      GroupGuard guard(table, tag);
      std::vector<Card> pile = gather_leftmost(g, v, halves, table);
      scramble_pile(pile, table, tag + ".scramble", RandomSource::DrawClass::Cosmetic);
      table.turn_over(std::span<Card>(pile), tag + ".open");
      int clubs = 0;
      for (const Card& c : pile)
        if (c.suit() == Suit::Club) ++clubs;
      table.release(std::move(pile));
      if (clubs != 2)
        throw VerifierReject(tag + ".open", "vertex " + std::to_string(v) + " has degree " +
                                                std::to_string(clubs) + ", want 2");
    }
    return Verdict::accept();
  } catch (const VerifierReject& r) {
    return Verdict::reject(r.where(), r.why());
  }
}

Verdict verify_max_leaf(const Graph& g, const std::vector<int>& coloring, int leaves,
                        const EdgeFlags& h, Table& table) {
  SubgraphCommitment commitment = commit_subgraph(g, h, table);
  HonestSpanningProver prover(g, coloring, h);
  Verdict spanning = verify_connected_spanning(g, coloring, commitment, prover, table, "span.");
  if (!spanning.accepted) return spanning;

  int n = g.vertex_count();
  int d = g.max_degree();
  try {
    std::vector<std::array<Sequence, 2>> halves = copy_commitments(g, commitment, table, "leaf");

    std::vector<Envelope> envelopes;
    envelopes.reserve(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
      std::string tag = "leaf.v" + std::to_string(v);
      GroupGuard guard(table, tag);
      std::vector<Card> pile = gather_leftmost(g, v, halves, table);
      int pad = d - static_cast<int>(pile.size());
      if (pad > 0) {
        Sequence hearts = table.deal_pattern(std::vector<Suit>(static_cast<size_t>(pad),
                                                               Suit::Heart));
        table.turn_over(hearts, tag + ".pad");
        turn_down(hearts);
        for (Card& c : std::move(hearts).release_cards()) pile.push_back(std::move(c));
      }
      scramble_pile(pile, table, tag + ".scramble", RandomSource::DrawClass::Cosmetic);
      envelopes.push_back(Envelope{std::move(pile)});
    }

    {
      GroupGuard guard(table, "leaf.envelopes");
      table.log_action("leaf.envelopes.scramble");
      if (table.next_shuffle_executes() && envelopes.size() > 1) {
        std::vector<int> src = draw_permutation(n, table.rng(),
                                                RandomSource::DrawClass::Cosmetic);
        std::vector<Envelope> mixed;
        mixed.reserve(envelopes.size());
        for (int i = 0; i < n; ++i)
          mixed.push_back(std::move(envelopes[static_cast<size_t>(src[static_cast<size_t>(i)])]));
        envelopes = std::move(mixed);
      }
    }

    // Private inspection: the prover opens every envelope away from the
    // table and publicly reveals exactly the single-club ones.
    GroupGuard guard(table, "leaf.open");
    int shown = 0;
    for (size_t i = 0; i < envelopes.size(); ++i) {
      int clubs = 0;
      for (const Card& c : envelopes[i].cards)
        if (c.suit() == Suit::Club) ++clubs;
      if (clubs != 1) continue;
      std::string tag = "leaf.env" + std::to_string(i) + ".open";
      table.turn_over(std::span<Card>(envelopes[i].cards), tag);
      int up_clubs = 0;
      for (const Card& c : envelopes[i].cards)
        if (c.is_up() && c.suit() == Suit::Club) ++up_clubs;
      if (up_clubs != 1)
        throw VerifierReject(tag, "opened envelope shows " + std::to_string(up_clubs) +
                                      " clubs, want exactly 1");
      ++shown;
    }
    for (Envelope& env : envelopes) table.release(std::move(env.cards));
    if (shown < leaves)
      throw VerifierReject("leaf.count", "only " + std::to_string(shown) +
                                             " single-club envelopes, claimed " +
                                             std::to_string(leaves));
    return Verdict::accept();
  } catch (const VerifierReject& r) {
    return Verdict::reject(r.where(), r.why());
  }
}

}  // namespace cardzk
