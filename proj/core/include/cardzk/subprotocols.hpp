#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cardzk/matrix.hpp"
#include "cardzk/table.hpp"

namespace cardzk {

// Oblivious pick of one sequence out of k, keyed by a selector sequence
// over Z/kZ, with the donors recoverable afterwards.
//
// Layout (protocol rows 1-based): Row 1 = public E_k(0) used to undo the
// shifts, Row 2 = the selector, Rows 3.. = the candidates standing
// vertically, one per column. select_sequence shifts, reveals Row 2 to
// locate the pick, and pulls that column out; restore_selection shifts
// again, reveals Row 1 and rotates everything home.
class SelectionContext {
public:
  SelectionContext(SelectionContext&&) = default;
  SelectionContext& operator=(SelectionContext&&) = default;

  // Return the borrowed cards into the slot they came from.
  void put_back(Sequence seq);

  // Give up on restoring: every card still in the matrix leaves play
  // face-down (their values correlate with secrets). Used by multiply,
  // where the pick itself is the product and the donors are scratch.
  void abandon();

  // After restore_selection: recover the pieces.
  Sequence take_selector();
  std::vector<Sequence> take_candidates();

private:
  friend std::pair<Sequence, SelectionContext> select_sequence(
      std::vector<Sequence> candidates, Sequence selector, Table& table,
      const std::string& tag);
  friend void restore_selection(SelectionContext& ctx, Table& table);

  enum class Phase { Outstanding, Returned, Restored, Abandoned };

  SelectionContext(CardMatrix m, Table& table, std::string tag, int picked_column,
                   int candidate_length)
      : matrix_(std::move(m)), table_(&table), tag_(std::move(tag)),
        picked_column_(picked_column), candidate_length_(candidate_length) {}

  CardMatrix matrix_;
  Table* table_;
  std::string tag_;
  int picked_column_;
  int candidate_length_;
  Phase phase_ = Phase::Outstanding;
  Sequence selector_;
  std::vector<Sequence> candidates_;
};

// Extracts candidates[decode(selector)] without anyone learning which.
// Draw group: tag + ".pick". Throws VerifierReject if the revealed
// selector row does not show exactly one heart.
std::pair<Sequence, SelectionContext> select_sequence(std::vector<Sequence> candidates,
                                                      Sequence selector, Table& table,
                                                      const std::string& tag);

// Draw group: tag + ".restore". Requires put_back first.
void restore_selection(SelectionContext& ctx, Table& table);

// Counting subprotocol on an m-row matrix whose rows each encode a value:
// returns t = how many of rows 2..m encode the same value as Row 1,
// revealing nothing else. The matrix is handed back restored. Draw
// groups: tag + {".cols", ".rows", ".restore.marks.cols",
// ".restore.marks.rows"}. Throws VerifierReject on a malformed Row 1.
int neighbor_count(CardMatrix& m, Table& table, const std::string& tag);

// Produces `copies` + 1 sequences all encoding decode(a); a is consumed.
// Draw group: tag.
std::vector<Sequence> copy_sequence(Sequence a, int copies, Table& table,
                                    const std::string& tag);

// Returns E_k(a+b mod k); both inputs consumed. Draw group: tag.
Sequence add_sequences(Sequence a, Sequence b, Table& table, const std::string& tag);

// Returns E_k(a*b mod k); both inputs consumed. Composed from copy, add
// and a final selection whose donors are abandoned face-down.
Sequence multiply_sequences(Sequence a, Sequence b, Table& table, const std::string& tag);

}  // namespace cardzk
