#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cardzk/cards.hpp"

namespace cardzk {

class Table;

// A rectangular arrangement of cards on the table. Cells can be vacated
// temporarily (a sequence pulled out and later returned); whole-matrix
// moves like rotations and permutations require every cell occupied.
//
// Rows and columns are 0-based here; protocol descriptions that speak of
// "row 1", "row 2" map to indices 0, 1.
class CardMatrix {
public:
  CardMatrix(int rows, int cols);

  // Each sequence becomes one row; all must share the same length.
  static CardMatrix from_rows(std::vector<Sequence> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool full() const;

  bool has(int r, int c) const { return cell(r, c).has_value(); }
  Card& at(int r, int c);
  const Card& at(int r, int c) const;

  Card take(int r, int c);
  void place(int r, int c, Card card);

  Sequence take_row(int r);
  void place_row(int r, Sequence seq);
  // Column segment read top-to-bottom, inclusive bounds.
  std::vector<Card> take_column(int c, int from_row, int to_row);
  void place_column(int c, int from_row, std::vector<Card> cards);

  std::vector<Card*> row_ptrs(int r);
  std::vector<Card*> column_ptrs(int c, int from_row, int to_row);
  std::vector<Card*> all_ptrs();

  // Cyclic shift of the columns; the column at position c moves to
  // (c + amount) mod cols. Requires a full matrix.
  void rotate_right(int amount);
  void rotate_left(int amount);

  // src_of[c] = index of the column that ends up at position c.
  void permute_columns(const std::vector<int>& src_of);
  // Permutes rows from_row..rows-1; src_of is relative to from_row.
  void permute_rows(int from_row, const std::vector<int>& src_of);

  // True-symbol digest of the layout (content, facing, vacancies); used
  // for branch-independence checks, never shown to the verifier.
  std::uint64_t digest(std::uint64_t seed) const;

private:
  std::optional<Card>& cell(int r, int c);
  const std::optional<Card>& cell(int r, int c) const;

  int rows_;
  int cols_;
  std::vector<std::optional<Card>> cells_;
};

// A matrix with marking cards attached: one above each column (numbers
// 1..cols) and one beside each row except the first (numbers 2..rows).
// The marks travel with their column/row through permutations, which is
// what later lets the original order be restored publicly.
class EnhancedMatrix {
public:
  // Takes ownership of the core; draws marking cards from the table.
  EnhancedMatrix(CardMatrix core, Table& table);

  CardMatrix& core() { return core_; }
  const CardMatrix& core() const { return core_; }

  std::vector<Card>& column_marks() { return col_marks_; }
  std::vector<Card>& row_marks() { return row_marks_; }

  // Current mark numbers left-to-right / top-to-bottom.
  std::vector<int> column_mark_numbers() const;
  std::vector<int> row_mark_numbers() const;

  void permute_columns(const std::vector<int>& src_of);
  // Joint permutation of core rows 1..rows-1 and their marks.
  void permute_marked_rows(const std::vector<int>& src_of);

  // Requires marks back in ascending order; returns the marks to the
  // table and releases the core.
  CardMatrix detach(Table& table);

  std::uint64_t digest(std::uint64_t seed) const;

private:
  CardMatrix core_;
  std::vector<Card> col_marks_;  // above columns, numbers 1..cols
  std::vector<Card> row_marks_;  // beside rows 1..rows-1, numbers 2..rows
};

}  // namespace cardzk
