#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cardzk/combinatorics.hpp"
#include "cardzk/matrix.hpp"
#include "cardzk/shuffle.hpp"
#include "cardzk/table.hpp"
#include "doctest.h"

using namespace cardzk;

namespace {

CardMatrix matrix_of(const std::vector<int>& values, int k) {
  std::vector<Sequence> rows;
  for (int v : values) rows.push_back(encode(v, k));
  return CardMatrix::from_rows(std::move(rows));
}

std::vector<int> decode_rows(CardMatrix& m) {
  std::vector<int> out;
  for (int r = 0; r < m.rows(); ++r) {
    Sequence row = m.take_row(r);
    out.push_back(decode(row));
    m.place_row(r, std::move(row));
  }
  return out;
}

}  // namespace

TEST_CASE("matrix rotation shifts every row's value by the same offset") {
  CardMatrix m = matrix_of({0, 2, 1}, 4);
  m.rotate_right(3);
  CHECK_EQ(decode_rows(m), std::vector<int>{3, 1, 0});
  m.rotate_left(3);
  CHECK_EQ(decode_rows(m), std::vector<int>{0, 2, 1});
}

TEST_CASE("column permutation moves the source column into each slot") {
  CardMatrix m = matrix_of({0, 1, 2}, 3);
  // New col 0 <- old col 2, col 1 <- old col 0, col 2 <- old col 1.
  m.permute_columns({2, 0, 1});
  CHECK_EQ(decode_rows(m), std::vector<int>{1, 2, 0});
}

TEST_CASE("row permutation below the first row leaves row 0 in place") {
  CardMatrix m = matrix_of({0, 1, 2}, 3);
  m.permute_rows(1, {1, 0});
  CHECK_EQ(decode_rows(m), std::vector<int>{0, 2, 1});
}

TEST_CASE("matrix rejects bad shapes and vacant-cell moves") {
  CHECK_THROWS_AS(CardMatrix(0, 2), ProtocolMisuse);
  std::vector<Sequence> uneven;
  uneven.push_back(encode(0, 2));
  uneven.push_back(encode(0, 3));
  CHECK_THROWS_AS(CardMatrix::from_rows(std::move(uneven)), ProtocolMisuse);

  CardMatrix m = matrix_of({0, 1}, 2);
  Card c = m.take(0, 0);
  CHECK_FALSE(m.full());
  CHECK_THROWS_AS(m.rotate_right(1), ProtocolMisuse);
  CHECK_THROWS_AS(m.take(0, 0), ProtocolMisuse);
  m.place(0, 0, std::move(c));
  CHECK_THROWS_AS(m.place(0, 0, Card::club()), ProtocolMisuse);
  CHECK(m.full());
}

TEST_CASE("enhancing a matrix attaches ascending column and row marks") {
  RandomSource rng = RandomSource::seeded(0);
  Table table(rng);
  EnhancedMatrix em(matrix_of({0, 1, 2}, 4), table);
  CHECK_EQ(em.column_mark_numbers(), std::vector<int>{1, 2, 3, 4});
  CHECK_EQ(em.row_mark_numbers(), std::vector<int>{2, 3});
  CHECK_EQ(table.usage().marking_in_play, 6);
  CardMatrix core = em.detach(table);
  CHECK_EQ(table.usage().marking_in_play, 0);
  CHECK_EQ(decode_rows(core), std::vector<int>{0, 1, 2});
}

TEST_CASE("pile shift hits every cyclic offset with equal probability") {
  for (int k = 2; k <= 5; ++k) {
    std::set<int> offsets;
    std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
      Table table(rng);
      CardMatrix m = matrix_of({1 % k, 0}, k);
      int r = pile_shift(m, table, "shift");
      offsets.insert(r);
      CHECK_EQ(decode_rows(m), std::vector<int>{(1 % k + r) % k, r});
      CHECK_EQ(rng.leaf_probability(), doctest::Approx(1.0 / k));
    });
    CHECK_EQ(leaves, k);
    CHECK_EQ(static_cast<int>(offsets.size()), k);
  }
}

TEST_CASE("double scramble explores cols! times (rows-1)! outcomes") {
  const int m = 3, k = 3;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    Table table(rng);
    // Row r starts as E(r), heart under the column marked r+1.
    EnhancedMatrix em(matrix_of({0, 1, 2}, k), table);
    double_scramble(em, table, "mix");
    std::vector<int> cols = em.column_mark_numbers();
    std::vector<int> row_marks = em.row_mark_numbers();
    std::vector<int> vals = decode_rows(em.core());
    for (int r = 0; r < m; ++r) {
      int original_row = r == 0 ? 0 : row_marks[static_cast<size_t>(r) - 1] - 1;
      int heart_col = vals[static_cast<size_t>(r)];
      // Marks ride with their columns, so the heart of original row i is
      // still under the column marked i+1.
      CHECK_EQ(cols[static_cast<size_t>(heart_col)], original_row + 1);
    }
  });
  CHECK_EQ(leaves, factorial(k) * factorial(m - 1));
}

TEST_CASE("rearrange publicly restores the original order after scrambling") {
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    Table table(rng);
    EnhancedMatrix em(matrix_of({2, 0, 1}, 3), table);
    double_scramble(em, table, "mix");
    rearrange(em, table, "mix.restore");
    CHECK_EQ(em.column_mark_numbers(), std::vector<int>{1, 2, 3});
    CHECK_EQ(em.row_mark_numbers(), std::vector<int>{2, 3});
    CardMatrix core = em.detach(table);
    CHECK_EQ(decode_rows(core), std::vector<int>{2, 0, 1});
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK_FALSE(core.at(r, c).is_up());
  });
  // cols! rows! on the way out, cols! rows! drawn again by the restore.
  CHECK_EQ(leaves, 6 * 2 * 6 * 2);
}

TEST_CASE("verdict fidelity quotients the column scramble to a rotation") {
  OutcomeEnumerator::Options opts;
  opts.fidelity = RandomSource::Fidelity::Verdict;
  std::set<std::vector<int>> layouts;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        Table table(rng);
        EnhancedMatrix em(matrix_of({0, 1, 2}, 3), table);
        double_scramble(em, table, "mix");
        layouts.insert(decode_rows(em.core()));
      },
      opts);
  CHECK_EQ(leaves, 3);
  CHECK_EQ(static_cast<int>(layouts.size()), 3);
}

TEST_CASE("a sabotaged shuffle logs its action but moves nothing") {
  RandomSource rng = RandomSource::seeded(7);
  Table table(rng);
  table.set_skipped_shuffle(0);
  CardMatrix m = matrix_of({1, 2}, 3);
  int r = pile_shift(m, table, "shift");
  CHECK_EQ(r, 0);
  CHECK_EQ(decode_rows(m), std::vector<int>{1, 2});
  CHECK_EQ(table.shuffle_calls(), 1);
  REQUIRE_EQ(table.transcript().events().size(), 1u);
  // Later shuffles on the same table run normally.
  bool moved = false;
  for (int trial = 0; trial < 32 && !moved; ++trial) {
    int r2 = pile_shift(m, table, "shift2");
    moved = r2 != 0;
  }
  CHECK(moved);
}

TEST_CASE("pile scrambling reaches every ordering of a loose pile") {
  std::set<std::string> orders;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    Table table(rng);
    std::vector<Card> pile = table.deal_marks(1, 3);
    scramble_pile(pile, table, "mix", RandomSource::DrawClass::Core);
    std::string order;
    for (const Card& c : pile) order += c.symbol_text();
    orders.insert(order);
  });
  CHECK_EQ(leaves, 6);
  CHECK_EQ(static_cast<int>(orders.size()), 6);
}
