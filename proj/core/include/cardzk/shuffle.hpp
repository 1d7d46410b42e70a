#pragma once

#include <string>
#include <vector>

#include "cardzk/matrix.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/table.hpp"

namespace cardzk {

// The physical shuffle operations. Every function here consumes exactly
// one sabotage slot per shuffle action via Table::next_shuffle_executes,
// so the mutation sweep can target any site; a skipped shuffle still logs
// its action (the cheat is not announced) but draws nothing and moves
// nothing.

// Cyclic shift of the columns by a hidden uniform offset. Returns the
// offset for engine-side assertions; protocol logic must never branch on
// it.
int pile_shift(CardMatrix& m, Table& table, const std::string& tag);

// The two halves of the double scramble, separately callable so a caller
// can put their draws in distinct enumeration groups. Draw ranges: cols!
// and (rows-1)! normally; under enumerated Verdict fidelity the column
// permutation is quotiented to a cyclic shift and the row permutation to
// identity, which cannot change any verdict (reveals in this engine
// depend only on which original column is selected and on per-column
// heart counts).
void scramble_columns(EnhancedMatrix& em, Table& table, const std::string& tag);
void scramble_rows(EnhancedMatrix& em, Table& table, const std::string& tag);

// Uniformly permutes the columns, then the rows below the first, marks
// riding along.
void double_scramble(EnhancedMatrix& em, Table& table, const std::string& tag);

// Restores the original column/row order publicly: scramble again, turn
// over the marking cards, sort columns by mark, then rows by mark. The
// revealed mark orders are drawn directly (uniform over orderings, which
// is exactly the distribution the composed scramble induces) in their own
// draw groups, tag+".marks.cols" / tag+".marks.rows", as Cosmetic draws.
void rearrange(EnhancedMatrix& em, Table& table, const std::string& tag);

// Scrambles a loose pile of face-down cards into uniformly random order.
void scramble_pile(std::vector<Card>& pile, Table& table, const std::string& tag,
                   RandomSource::DrawClass cls);

// Uniform permutation of {0..n-1} as src_of indices, drawn as one value
// in [n!]. No sabotage slot, no action log; building block only.
std::vector<int> draw_permutation(int n, RandomSource& rng, RandomSource::DrawClass cls);

}  // namespace cardzk
