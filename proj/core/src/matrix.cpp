#include "cardzk/matrix.hpp"

#include <algorithm>
#include <utility>

#include "cardzk/errors.hpp"
#include "cardzk/table.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

CardMatrix::CardMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw ProtocolMisuse("matrix: empty shape");
  cells_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

CardMatrix CardMatrix::from_rows(std::vector<Sequence> rows) {
  if (rows.empty()) throw ProtocolMisuse("matrix: no rows");
  CardMatrix m(static_cast<int>(rows.size()), rows.front().modulus());
  for (int r = 0; r < m.rows_; ++r) m.place_row(r, std::move(rows[static_cast<size_t>(r)]));
  return m;
}

std::optional<Card>& CardMatrix::cell(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw ProtocolMisuse("matrix: cell out of range");
  return cells_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

const std::optional<Card>& CardMatrix::cell(int r, int c) const {
  return const_cast<CardMatrix*>(this)->cell(r, c);
}

bool CardMatrix::full() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const std::optional<Card>& c) { return c.has_value(); });
}

Card& CardMatrix::at(int r, int c) {
  std::optional<Card>& x = cell(r, c);
  if (!x) throw ProtocolMisuse("matrix: cell is vacant");
  return *x;
}

const Card& CardMatrix::at(int r, int c) const {
  return const_cast<CardMatrix*>(this)->at(r, c);
}

Card CardMatrix::take(int r, int c) {
  std::optional<Card>& x = cell(r, c);
  if (!x) throw ProtocolMisuse("matrix: taking from vacant cell");
  Card out = *x;
  x.reset();
  return out;
}

void CardMatrix::place(int r, int c, Card card) {
  std::optional<Card>& x = cell(r, c);
  if (x) throw ProtocolMisuse("matrix: cell already occupied");
  x = card;
}

Sequence CardMatrix::take_row(int r) {
  std::vector<Card> cards;
  cards.reserve(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) cards.push_back(take(r, c));
  return Sequence(std::move(cards));
}

void CardMatrix::place_row(int r, Sequence seq) {
  if (seq.modulus() != cols_) throw ProtocolMisuse("matrix: row length mismatch");
  std::vector<Card> cards = std::move(seq).release_cards();
  for (int c = 0; c < cols_; ++c) place(r, c, cards[static_cast<size_t>(c)]);
}

std::vector<Card> CardMatrix::take_column(int c, int from_row, int to_row) {
  std::vector<Card> cards;
  for (int r = from_row; r <= to_row; ++r) cards.push_back(take(r, c));
  return cards;
}

void CardMatrix::place_column(int c, int from_row, std::vector<Card> cards) {
  for (size_t i = 0; i < cards.size(); ++i)
    place(from_row + static_cast<int>(i), c, cards[i]);
}

std::vector<Card*> CardMatrix::row_ptrs(int r) {
  std::vector<Card*> out;
  out.reserve(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out.push_back(&at(r, c));
  return out;
}

std::vector<Card*> CardMatrix::column_ptrs(int c, int from_row, int to_row) {
  std::vector<Card*> out;
  for (int r = from_row; r <= to_row; ++r) out.push_back(&at(r, c));
  return out;
}

std::vector<Card*> CardMatrix::all_ptrs() {
  std::vector<Card*> out;
  for (std::optional<Card>& x : cells_)
    if (x) out.push_back(&*x);
  return out;
}

void CardMatrix::rotate_right(int amount) {
  if (!full()) throw ProtocolMisuse("matrix: rotating with vacant cells");
  int k = cols_;
  int shift = ((amount % k) + k) % k;
  if (shift == 0) return;
  for (int r = 0; r < rows_; ++r) {
    auto begin = cells_.begin() + static_cast<long>(r) * k;
    std::rotate(begin, begin + (k - shift), begin + k);
  }
}

void CardMatrix::rotate_left(int amount) { rotate_right(-amount); }

void CardMatrix::permute_columns(const std::vector<int>& src_of) {
  if (static_cast<int>(src_of.size()) != cols_)
    throw ProtocolMisuse("matrix: column permutation size mismatch");
  if (!full()) throw ProtocolMisuse("matrix: permuting with vacant cells");
  std::vector<std::optional<Card>> next(cells_.size());
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      next[static_cast<size_t>(r) * cols_ + c] =
          cells_[static_cast<size_t>(r) * cols_ + src_of[static_cast<size_t>(c)]];
  cells_ = std::move(next);
}

void CardMatrix::permute_rows(int from_row, const std::vector<int>& src_of) {
  int span = rows_ - from_row;
  if (static_cast<int>(src_of.size()) != span)
    throw ProtocolMisuse("matrix: row permutation size mismatch");
  if (!full()) throw ProtocolMisuse("matrix: permuting with vacant cells");
  std::vector<std::optional<Card>> next(cells_.size());
  for (int r = 0; r < from_row; ++r)
    for (int c = 0; c < cols_; ++c)
      next[static_cast<size_t>(r) * cols_ + c] = cells_[static_cast<size_t>(r) * cols_ + c];
  for (int i = 0; i < span; ++i) {
    int dst = from_row + i;
    int src = from_row + src_of[static_cast<size_t>(i)];
    for (int c = 0; c < cols_; ++c)
      next[static_cast<size_t>(dst) * cols_ + c] = cells_[static_cast<size_t>(src) * cols_ + c];
  }
  cells_ = std::move(next);
}

std::uint64_t CardMatrix::digest(std::uint64_t seed) const {
  std::uint64_t h = seed;
  auto mix = [&h](int v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    h = fnv1a64(b, 4, h);
  };
  mix(rows_);
  mix(cols_);
  for (const std::optional<Card>& x : cells_) {
    if (!x) {
      mix(-1);
      continue;
    }
    mix(static_cast<int>(x->suit()));
    mix(x->mark_number());
    mix(static_cast<int>(x->facing()));
  }
  return h;
}

EnhancedMatrix::EnhancedMatrix(CardMatrix core, Table& table) : core_(std::move(core)) {
  if (!core_.full()) throw ProtocolMisuse("enhance: vacant cells");
  col_marks_ = table.deal_marks(1, core_.cols());
  if (core_.rows() >= 2) row_marks_ = table.deal_marks(2, core_.rows());
}

std::vector<int> EnhancedMatrix::column_mark_numbers() const {
  std::vector<int> out;
  for (const Card& c : col_marks_) out.push_back(c.mark_number());
  return out;
}

std::vector<int> EnhancedMatrix::row_mark_numbers() const {
  std::vector<int> out;
  for (const Card& c : row_marks_) out.push_back(c.mark_number());
  return out;
}

void EnhancedMatrix::permute_columns(const std::vector<int>& src_of) {
  core_.permute_columns(src_of);
  std::vector<Card> next;
  next.reserve(col_marks_.size());
  for (size_t c = 0; c < col_marks_.size(); ++c)
    next.push_back(col_marks_[static_cast<size_t>(src_of[c])]);
  col_marks_ = std::move(next);
}

void EnhancedMatrix::permute_marked_rows(const std::vector<int>& src_of) {
  if (src_of.size() != row_marks_.size())
    throw ProtocolMisuse("enhance: row permutation size mismatch");
  core_.permute_rows(1, src_of);
  std::vector<Card> next;
  next.reserve(row_marks_.size());
  for (size_t i = 0; i < row_marks_.size(); ++i)
    next.push_back(row_marks_[static_cast<size_t>(src_of[i])]);
  row_marks_ = std::move(next);
}

CardMatrix EnhancedMatrix::detach(Table& table) {
  for (size_t c = 0; c < col_marks_.size(); ++c)
    if (col_marks_[c].mark_number() != static_cast<int>(c) + 1)
      throw ProtocolMisuse("detach: column marks not restored");
  for (size_t i = 0; i < row_marks_.size(); ++i)
    if (row_marks_[i].mark_number() != static_cast<int>(i) + 2)
      throw ProtocolMisuse("detach: row marks not restored");
  table.release(std::move(col_marks_));
  table.release(std::move(row_marks_));
  return std::move(core_);
}

std::uint64_t EnhancedMatrix::digest(std::uint64_t seed) const {
  std::uint64_t h = core_.digest(seed);
  auto mix = [&h](int v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    h = fnv1a64(b, 4, h);
  };
  for (const Card& c : col_marks_) mix(c.mark_number());
  mix(-7);
  for (const Card& c : row_marks_) mix(c.mark_number());
  return h;
}

}  // namespace cardzk
