#include "cardzk/shuffle.hpp"

#include <algorithm>

#include "cardzk/combinatorics.hpp"
#include "cardzk/errors.hpp"

namespace cardzk {

namespace {

// src_of for "rotate right by amount": new column c came from c - amount.
std::vector<int> rotation_src(int k, int amount) {
  std::vector<int> src_of(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c)
    src_of[static_cast<size_t>(c)] = ((c - amount) % k + k) % k;
  return src_of;
}


bool quotient_shuffles(const RandomSource& rng) {
  return rng.enumerated() && rng.fidelity() == RandomSource::Fidelity::Verdict;
}

}  // namespace

std::vector<int> draw_permutation(int n, RandomSource& rng, RandomSource::DrawClass cls) {
  std::int64_t range = factorial(n);
  if (range > 20'000'000) throw CapacityError("permutation draw too large");
  int index = rng.draw(static_cast<int>(range), cls);
  return nth_permutation(n, index);
}

int pile_shift(CardMatrix& m, Table& table, const std::string& tag) {
  table.log_action(tag);
  if (!table.next_shuffle_executes()) return 0;
  int r = table.rng().draw(m.cols());
  m.rotate_right(r);
  return r;
}

void scramble_columns(EnhancedMatrix& em, Table& table, const std::string& tag) {
  int k = em.core().cols();
  table.log_action(tag);
  if (!table.next_shuffle_executes()) return;
  if (quotient_shuffles(table.rng())) {
    int c = table.rng().draw(k);
    em.permute_columns(rotation_src(k, c));
  } else {
    em.permute_columns(draw_permutation(k, table.rng(), RandomSource::DrawClass::Core));
  }
}

void scramble_rows(EnhancedMatrix& em, Table& table, const std::string& tag) {
  int marked_rows = static_cast<int>(em.row_marks().size());
  table.log_action(tag);
  if (!table.next_shuffle_executes()) return;
  if (!quotient_shuffles(table.rng()) && marked_rows > 1) {
    em.permute_marked_rows(
        draw_permutation(marked_rows, table.rng(), RandomSource::DrawClass::Core));
  }
}

void double_scramble(EnhancedMatrix& em, Table& table, const std::string& tag) {
  scramble_columns(em, table, tag + ".cols");
  scramble_rows(em, table, tag + ".rows");
}

namespace {

// One half of the restoring rearrangement: scramble so the marks land in
// a freshly drawn order (or stay put if the shuffle is sabotaged), show
// the marks, then sort them back to ascending.
void restore_axis(EnhancedMatrix& em, Table& table, bool columns,
                  const std::string& action_tag, const std::string& draw_group,
                  const std::string& reveal_tag) {
  std::vector<Card>& marks = columns ? em.column_marks() : em.row_marks();
  int n = static_cast<int>(marks.size());
  int lowest = columns ? 1 : 2;

  auto apply = [&](const std::vector<int>& src_of) {
    if (columns) em.permute_columns(src_of);
    else em.permute_marked_rows(src_of);
  };

  std::string outer = table.rng().group();
  table.set_group(draw_group);
  table.log_action(action_tag);
  if (table.next_shuffle_executes() && n > 1) {
    std::vector<int> target =
        draw_permutation(n, table.rng(), RandomSource::DrawClass::Cosmetic);
    // Position of each mark number right now.
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      pos[static_cast<size_t>(marks[static_cast<size_t>(i)].mark_number() - lowest)] = i;
    std::vector<int> src_of(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      src_of[static_cast<size_t>(i)] = pos[static_cast<size_t>(target[static_cast<size_t>(i)])];
    apply(src_of);
  }

  std::vector<Card*> mark_ptrs;
  for (Card& c : marks) mark_ptrs.push_back(&c);
  table.turn_over(mark_ptrs, reveal_tag);
  table.set_group(outer);

  std::vector<int> sort_src(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    sort_src[static_cast<size_t>(marks[static_cast<size_t>(i)].mark_number() - lowest)] = i;
  if (n > 0) apply(sort_src);
  for (Card& c : marks) c.set_facing(Facing::Down);
}

}  // namespace

void rearrange(EnhancedMatrix& em, Table& table, const std::string& tag) {
  restore_axis(em, table, /*columns=*/true, tag + ".scramble.cols",
               table.rng().group() + ".marks.cols", tag + ".marks.cols");
  restore_axis(em, table, /*columns=*/false, tag + ".scramble.rows",
               table.rng().group() + ".marks.rows", tag + ".marks.rows");
  for (size_t c = 0; c < em.column_marks().size(); ++c)
    if (em.column_marks()[c].mark_number() != static_cast<int>(c) + 1)
      throw ProtocolMisuse("rearrange: columns not restored");
  for (size_t i = 0; i < em.row_marks().size(); ++i)
    if (em.row_marks()[i].mark_number() != static_cast<int>(i) + 2)
      throw ProtocolMisuse("rearrange: rows not restored");
}

void scramble_pile(std::vector<Card>& pile, Table& table, const std::string& tag,
                   RandomSource::DrawClass cls) {
  table.log_action(tag);
  if (!table.next_shuffle_executes()) return;
  int n = static_cast<int>(pile.size());
  if (n <= 1) return;
  std::vector<int> src_of = draw_permutation(n, table.rng(), cls);
  std::vector<Card> next;
  next.reserve(pile.size());
  for (int i = 0; i < n; ++i) next.push_back(pile[static_cast<size_t>(src_of[static_cast<size_t>(i)])]);
  pile = std::move(next);
}

}  // namespace cardzk
