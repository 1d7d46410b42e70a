#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cardzk/errors.hpp"

namespace cardzk {

enum class Suit : std::uint8_t { Club, Heart, Mark };
enum class Facing : std::uint8_t { Down, Up };

// One physical card. The symbol (suit, and number for marking cards) is
// fixed at creation; only the facing ever changes. Cards carry no hidden
// identity: two clubs are indistinguishable.
class Card {
public:
  static Card club() { return Card(Suit::Club, 0); }
  static Card heart() { return Card(Suit::Heart, 0); }
  static Card marking(int number) { return Card(Suit::Mark, number); }

  Suit suit() const { return suit_; }
  int mark_number() const { return mark_; }
  Facing facing() const { return facing_; }
  bool is_up() const { return facing_ == Facing::Up; }
  void set_facing(Facing f) { facing_ = f; }

  bool same_symbol(const Card& o) const {
    return suit_ == o.suit_ && mark_ == o.mark_;
  }

  // Symbol as transcript text: "C", "H", or the mark number.
  std::string symbol_text() const {
    switch (suit_) {
      case Suit::Club: return "C";
      case Suit::Heart: return "H";
      default: return std::to_string(mark_);
    }
  }

private:
  Card(Suit s, int m) : suit_(s), mark_(m) {}
  Suit suit_;
  int mark_;
  Facing facing_ = Facing::Down;
};

// An ordered row of encoding cards (clubs/hearts). A well-formed sequence
// of length k has exactly one heart and encodes the heart's position
// (0-based) as an integer in Z/kZ; documentation positions are 1-based
// from the left, storage is 0-based.
class Sequence {
public:
  Sequence() = default;
  explicit Sequence(std::vector<Card> cards);

  // Copying a sequence would duplicate physical cards; moves only.
  Sequence(const Sequence&) = delete;
  Sequence& operator=(const Sequence&) = delete;
  Sequence(Sequence&&) = default;
  Sequence& operator=(Sequence&&) = default;

  int modulus() const { return static_cast<int>(cards_.size()); }
  bool empty() const { return cards_.empty(); }
  const Card& card(int i) const { return cards_.at(static_cast<size_t>(i)); }
  Card& card(int i) { return cards_.at(static_cast<size_t>(i)); }
  std::span<Card> cards() { return cards_; }
  std::span<const Card> cards() const { return cards_; }

  bool all_down() const;
  // True symbols, independent of facing. Engine/oracle side only.
  std::string pattern() const;

  std::vector<Card> release_cards() &&;

private:
  std::vector<Card> cards_;
};

// E_k(x): k face-down cards, all clubs except a heart at position x.
Sequence encode(int value, int modulus);

// The suit pattern of E_k(x); prover-side placement material.
std::vector<Suit> encode_pattern(int value, int modulus);

// Reads the true symbols. Throws MalformedSequence unless exactly one
// heart among clubs. Internal/oracle use; the verifier never calls this
// on hidden cards.
int decode(const Sequence& seq);

// Reverses the k-1 rightmost cards in place: E_k(x) becomes E_k(-x mod k).
Sequence reverse_tail(Sequence seq);

void turn_down(std::span<Card> cards);
void turn_down(Sequence& seq);

}  // namespace cardzk
