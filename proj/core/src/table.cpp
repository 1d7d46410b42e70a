#include "cardzk/table.hpp"

#include <algorithm>

#include "cardzk/errors.hpp"

namespace cardzk {

std::string symbols_text(std::span<const Card> cards) {
  std::string out;
  for (const Card& c : cards) {
    if (!out.empty()) out += ' ';
    out += c.symbol_text();
  }
  return out;
}

void Table::count_dealt(const Card& c) {
  if (c.suit() == Suit::Mark) {
    ++usage_.marking_in_play;
    usage_.peak_marking = std::max(usage_.peak_marking, usage_.marking_in_play);
    return;
  }
  ++usage_.encoding_in_play;
  usage_.peak_encoding = std::max(usage_.peak_encoding, usage_.encoding_in_play);
  if (c.suit() == Suit::Club) ++usage_.dealt_clubs;
  else ++usage_.dealt_hearts;
}

void Table::count_released(const Card& c) {
  if (c.suit() == Suit::Mark) {
    --usage_.marking_in_play;
    return;
  }
  --usage_.encoding_in_play;
  if (c.suit() == Suit::Club) ++usage_.released_clubs;
  else ++usage_.released_hearts;
}

Sequence Table::deal_encoding(int value, int k) {
  Sequence seq = encode(value, k);
  for (const Card& c : seq.cards()) count_dealt(c);
  return seq;
}

Sequence Table::deal_pattern(const std::vector<Suit>& pattern) {
  std::vector<Card> cards;
  cards.reserve(pattern.size());
  for (Suit s : pattern) {
    if (s == Suit::Mark) throw ProtocolMisuse("deal_pattern: marks not allowed");
    cards.push_back(s == Suit::Heart ? Card::heart() : Card::club());
    count_dealt(cards.back());
  }
  return Sequence(std::move(cards));
}

Sequence Table::deal_public(int value, int k, std::string_view tag) {
  Sequence seq = deal_encoding(value, k);
  turn_over(seq, tag);
  turn_down(seq);
  return seq;
}

std::vector<Card> Table::deal_marks(int from, int to) {
  std::vector<Card> marks;
  for (int i = from; i <= to; ++i) {
    marks.push_back(Card::marking(i));
    count_dealt(marks.back());
  }
  return marks;
}

void Table::release(Sequence&& seq) {
  for (const Card& c : seq.cards()) count_released(c);
  std::move(seq).release_cards();
}

void Table::release(std::vector<Card>&& cards) {
  for (const Card& c : cards) count_released(c);
  cards.clear();
}

void Table::release(Card&& card) { count_released(card); }

void Table::discard_face_up(Sequence&& seq, std::string_view tag) {
  turn_over(seq, tag);
  release(std::move(seq));
}

void Table::discard_hidden(Sequence&& seq) { release(std::move(seq)); }

namespace {
template <typename Deref, typename Range>
void turn_over_impl(Transcript* transcript, const std::string& group, Range&& cards,
                    std::string_view tag, Deref deref) {
  std::string symbols;
  bool changed = false;
  for (auto&& item : cards) {
    Card& c = deref(item);
    if (c.facing() == Facing::Down) {
      c.set_facing(Facing::Up);
      changed = true;
    }
    if (!symbols.empty()) symbols += ' ';
    symbols += c.symbol_text();
  }
  if (changed && transcript) transcript->reveal(std::string(tag), symbols, group);
}
}  // namespace

void Table::turn_over(std::span<Card> cards, std::string_view tag) {
  turn_over_impl(logging_ ? &transcript_ : nullptr, rng_->group(), cards, tag,
                 [](Card& c) -> Card& { return c; });
}

void Table::turn_over(const std::vector<Card*>& cards, std::string_view tag) {
  turn_over_impl(logging_ ? &transcript_ : nullptr, rng_->group(), cards, tag,
                 [](Card* c) -> Card& { return *c; });
}

void Table::turn_over(Sequence& seq, std::string_view tag) {
  turn_over(seq.cards(), tag);
}

void Table::turn_over(Card& card, std::string_view tag) {
  turn_over(std::span<Card>(&card, 1), tag);
}

}  // namespace cardzk
