#include "cardzk/cards.hpp"

#include <algorithm>

namespace cardzk {

Sequence::Sequence(std::vector<Card> cards) : cards_(std::move(cards)) {
  for (const Card& c : cards_) {
    if (c.suit() == Suit::Mark) {
      throw ProtocolMisuse("marking card inside an encoding sequence");
    }
  }
}

bool Sequence::all_down() const {
  return std::all_of(cards_.begin(), cards_.end(),
                     [](const Card& c) { return !c.is_up(); });
}

std::string Sequence::pattern() const {
  std::string out;
  out.reserve(cards_.size());
  for (const Card& c : cards_) out += c.symbol_text();
  return out;
}

std::vector<Card> Sequence::release_cards() && { return std::move(cards_); }

Sequence encode(int value, int modulus) {
  if (modulus < 1) throw std::domain_error("encode: modulus must be >= 1");
  if (value < 0 || value >= modulus) {
    throw std::domain_error("encode: value out of range");
  }
  std::vector<Card> cards;
  cards.reserve(static_cast<size_t>(modulus));
  for (int i = 0; i < modulus; ++i) {
    cards.push_back(i == value ? Card::heart() : Card::club());
  }
  return Sequence(std::move(cards));
}

std::vector<Suit> encode_pattern(int value, int modulus) {
  if (modulus < 1) throw std::domain_error("encode_pattern: modulus must be >= 1");
  if (value < 0 || value >= modulus) {
    throw std::domain_error("encode_pattern: value out of range");
  }
  std::vector<Suit> suits(static_cast<size_t>(modulus), Suit::Club);
  suits[static_cast<size_t>(value)] = Suit::Heart;
  return suits;
}

int decode(const Sequence& seq) {
  if (seq.modulus() == 0) throw MalformedSequence("decode: empty sequence");
  int heart_pos = -1;
  for (int i = 0; i < seq.modulus(); ++i) {
    if (seq.card(i).suit() == Suit::Heart) {
      if (heart_pos >= 0) throw MalformedSequence("decode: multiple hearts");
      heart_pos = i;
    }
  }
  if (heart_pos < 0) throw MalformedSequence("decode: no heart");
  return heart_pos;
}

Sequence reverse_tail(Sequence seq) {
  if (seq.modulus() == 0) throw std::domain_error("reverse_tail: empty sequence");
  auto cards = std::move(seq).release_cards();
  std::reverse(cards.begin() + 1, cards.end());
  return Sequence(std::move(cards));
}

void turn_down(std::span<Card> cards) {
  for (Card& c : cards) c.set_facing(Facing::Down);
}

void turn_down(Sequence& seq) { turn_down(seq.cards()); }

}  // namespace cardzk
