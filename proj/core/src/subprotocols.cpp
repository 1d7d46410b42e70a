#include "cardzk/subprotocols.hpp"

#include <utility>

#include "cardzk/errors.hpp"
#include "cardzk/shuffle.hpp"

namespace cardzk {

namespace {

// Locates the heart in a face-up row; -1 unless there is exactly one.
int single_heart_column(CardMatrix& m, int row) {
  int hearts = 0;
  int at = -1;
  for (int c = 0; c < m.cols(); ++c) {
    if (m.at(row, c).suit() == Suit::Heart) {
      ++hearts;
      at = c;
    }
  }
  return hearts == 1 ? at : -1;
}

void face_row_down(CardMatrix& m, int row) {
  for (Card* p : m.row_ptrs(row)) p->set_facing(Facing::Down);
}

void require_face_down(const Sequence& seq, const char* who) {
  if (!seq.all_down()) throw ProtocolMisuse(std::string(who) + ": cards must be face-down");
}

}  // namespace

std::pair<Sequence, SelectionContext> select_sequence(std::vector<Sequence> candidates,
                                                      Sequence selector, Table& table,
                                                      const std::string& tag) {
  int k = static_cast<int>(candidates.size());
  if (k < 1) throw ProtocolMisuse("select_sequence: no candidates");
  if (selector.modulus() != k)
    throw ProtocolMisuse("select_sequence: selector modulus must equal candidate count");
  int len = candidates.front().modulus();
  require_face_down(selector, "select_sequence");
  for (const Sequence& cand : candidates) {
    if (cand.modulus() != len)
      throw ProtocolMisuse("select_sequence: candidates must share one length");
    require_face_down(cand, "select_sequence");
  }

  CardMatrix m(len + 2, k);
  m.place_row(0, table.deal_public(0, k, tag + ".row1.deal"));
  m.place_row(1, std::move(selector));
  for (int j = 0; j < k; ++j) {
    std::vector<Card> cards = std::move(candidates[static_cast<size_t>(j)]).release_cards();
    m.place_column(j, 2, std::move(cards));
  }

  int picked;
  {
    GroupGuard guard(table, tag + ".pick");
    pile_shift(m, table, tag + ".shift");
    table.turn_over(m.row_ptrs(1), tag + ".row2");
    picked = single_heart_column(m, 1);
  }
  if (picked < 0)
    throw VerifierReject(tag + ".row2", "committed selector must show exactly one heart");
  face_row_down(m, 1);

  Sequence out(m.take_column(picked, 2, len + 1));
  SelectionContext ctx(std::move(m), table, tag, picked, len);
  return {std::move(out), std::move(ctx)};
}

void SelectionContext::put_back(Sequence seq) {
  if (phase_ != Phase::Outstanding)
    throw ProtocolMisuse("selection: nothing outstanding to put back");
  if (seq.modulus() != candidate_length_)
    throw ProtocolMisuse("selection: returned sequence has the wrong length");
  require_face_down(seq, "selection put_back");
  matrix_.place_column(picked_column_, 2, std::move(seq).release_cards());
  phase_ = Phase::Returned;
}

void SelectionContext::abandon() {
  if (phase_ == Phase::Restored || phase_ == Phase::Abandoned)
    throw ProtocolMisuse("selection: nothing left to abandon");
  for (int r = 0; r < matrix_.rows(); ++r) {
    for (int c = 0; c < matrix_.cols(); ++c) {
      if (!matrix_.has(r, c)) continue;
      Card card = matrix_.take(r, c);
      card.set_facing(Facing::Down);
      table_->release(std::move(card));
    }
  }
  phase_ = Phase::Abandoned;
}

void restore_selection(SelectionContext& ctx, Table& table) {
  if (ctx.phase_ != SelectionContext::Phase::Returned)
    throw ProtocolMisuse("restore_selection: extracted sequence was not returned");
  CardMatrix& m = ctx.matrix_;
  int home;
  {
    GroupGuard guard(table, ctx.tag_ + ".restore");
    pile_shift(m, table, ctx.tag_ + ".restore.shift");
    table.turn_over(m.row_ptrs(0), ctx.tag_ + ".row1");
    home = single_heart_column(m, 0);
  }
  if (home < 0) throw ProtocolMisuse("restore_selection: restore row corrupted");
  m.rotate_left(home);
  table.discard_face_up(m.take_row(0), ctx.tag_ + ".row1.discard");

  ctx.selector_ = m.take_row(1);
  for (int j = 0; j < m.cols(); ++j)
    ctx.candidates_.emplace_back(m.take_column(j, 2, ctx.candidate_length_ + 1));
  ctx.phase_ = SelectionContext::Phase::Restored;
}

Sequence SelectionContext::take_selector() {
  if (phase_ != Phase::Restored) throw ProtocolMisuse("selection: not restored yet");
  return std::move(selector_);
}

std::vector<Sequence> SelectionContext::take_candidates() {
  if (phase_ != Phase::Restored) throw ProtocolMisuse("selection: not restored yet");
  return std::move(candidates_);
}

int neighbor_count(CardMatrix& m, Table& table, const std::string& tag) {
  if (m.rows() < 2) throw ProtocolMisuse("neighbor_count: need a row to compare against");
  if (!m.full()) throw ProtocolMisuse("neighbor_count: matrix has vacancies");
  int rows = m.rows();

  GroupGuard outer_guard(table, table.rng().group());
  EnhancedMatrix em(std::move(m), table);

  table.set_group(tag + ".cols");
  scramble_columns(em, table, tag + ".scramble.cols");
  table.set_group(tag + ".rows");
  scramble_rows(em, table, tag + ".scramble.rows");

  table.set_group(tag + ".cols");
  table.turn_over(em.core().row_ptrs(0), tag + ".row1");
  int j = single_heart_column(em.core(), 0);
  if (j < 0) throw VerifierReject(tag + ".row1", "row 1 must show exactly one heart");

  table.set_group(tag + ".rows");
  std::vector<Card*> column = em.core().column_ptrs(j, 1, rows - 1);
  table.turn_over(column, tag + ".col");
  int t = 0;
  for (Card* p : column)
    if (p->suit() == Suit::Heart) ++t;

  face_row_down(em.core(), 0);
  for (Card* p : column) p->set_facing(Facing::Down);

  table.set_group(tag + ".restore");
  rearrange(em, table, tag + ".restore");
  m = em.detach(table);
  return t;
}

std::vector<Sequence> copy_sequence(Sequence a, int copies, Table& table,
                                    const std::string& tag) {
  if (copies < 1) throw ProtocolMisuse("copy: need at least one extra copy");
  require_face_down(a, "copy");
  int k = a.modulus();
  int made = copies + 1;

  GroupGuard guard(table, tag);
  CardMatrix m(made + 1, k);
  m.place_row(0, reverse_tail(std::move(a)));
  for (int i = 1; i <= made; ++i)
    m.place_row(i, table.deal_public(0, k, tag + ".blank.deal"));

  pile_shift(m, table, tag + ".shift");
  table.turn_over(m.row_ptrs(0), tag + ".row1");
  int j = single_heart_column(m, 0);
  if (j < 0) throw VerifierReject(tag + ".row1", "copied sequence must show exactly one heart");
  m.rotate_left(j);
  table.discard_face_up(m.take_row(0), tag + ".row1.discard");

  std::vector<Sequence> out;
  out.reserve(static_cast<size_t>(made));
  for (int i = 1; i <= made; ++i) out.push_back(m.take_row(i));
  return out;
}

Sequence add_sequences(Sequence a, Sequence b, Table& table, const std::string& tag) {
  if (a.modulus() != b.modulus()) throw ProtocolMisuse("add: moduli differ");
  require_face_down(a, "add");
  require_face_down(b, "add");

  GroupGuard guard(table, tag);
  CardMatrix m(2, a.modulus());
  m.place_row(0, reverse_tail(std::move(a)));
  m.place_row(1, std::move(b));

  pile_shift(m, table, tag + ".shift");
  table.turn_over(m.row_ptrs(0), tag + ".row1");
  int j = single_heart_column(m, 0);
  if (j < 0) throw VerifierReject(tag + ".row1", "added sequence must show exactly one heart");
  m.rotate_left(j);
  table.discard_face_up(m.take_row(0), tag + ".row1.discard");
  return m.take_row(1);
}

Sequence multiply_sequences(Sequence a, Sequence b, Table& table, const std::string& tag) {
  int k = a.modulus();
  if (b.modulus() != k) throw ProtocolMisuse("multiply: moduli differ");

  // Ladder of sequences encoding 0, a, 2a, ..., (k-1)a; a is copied up
  // front so each rung can be built by one copy (keeping the rung) plus
  // one add (consuming the fresh fuel).
  std::vector<Sequence> ladder;
  ladder.push_back(table.deal_public(0, k, tag + ".zero.deal"));
  if (k == 2) {
    ladder.push_back(std::move(a));
  } else if (k > 2) {
    std::vector<Sequence> fuel = copy_sequence(std::move(a), k - 2, table, tag + ".fuel");
    ladder.push_back(std::move(fuel.front()));
    for (int i = 2; i < k; ++i) {
      std::vector<Sequence> kept = copy_sequence(std::move(ladder[static_cast<size_t>(i - 1)]),
                                                 1, table, tag + ".rung" + std::to_string(i));
      ladder[static_cast<size_t>(i - 1)] = std::move(kept[0]);
      ladder.push_back(add_sequences(std::move(kept[1]),
                                     std::move(fuel[static_cast<size_t>(i - 1)]), table,
                                     tag + ".add" + std::to_string(i)));
    }
  }

  auto [product, ctx] = select_sequence(std::move(ladder), std::move(b), table, tag + ".pick");
  ctx.abandon();
  return product;
}

}  // namespace cardzk
