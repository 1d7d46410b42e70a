#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardzk/cards.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

// Everything a protocol run shares: the randomness source, the verifier's
// transcript, the card supply bookkeeping, and the instrumentation hooks.
//
// Cards enter play only through the deal_* functions and leave only
// through release/discard; the counters make card conservation and peak
// usage checkable. turn_over is the single place a RevealEvent can be
// born.
class Table {
public:
  struct Usage {
    std::int64_t encoding_in_play = 0;
    std::int64_t marking_in_play = 0;
    std::int64_t peak_encoding = 0;
    std::int64_t peak_marking = 0;
    std::int64_t dealt_clubs = 0;
    std::int64_t dealt_hearts = 0;
    std::int64_t released_clubs = 0;
    std::int64_t released_hearts = 0;
  };

  explicit Table(RandomSource& rs, bool logging = true)
      : rng_(&rs), logging_(logging) {}

  RandomSource& rng() { return *rng_; }
  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  bool logging() const { return logging_; }

  void set_group(std::string g) { rng_->set_group(std::move(g)); }

  // --- dealing & returning cards ---------------------------------------

  // Face-down E_k(value), hidden placement (prover-private content).
  Sequence deal_encoding(int value, int k);
  // Arbitrary club/heart pattern, face-down (adversarial prover hands).
  Sequence deal_pattern(const std::vector<Suit>& pattern);
  // Public placement: dealt face-up for everyone to check, logged as a
  // reveal, then turned down.
  Sequence deal_public(int value, int k, std::string_view tag);
  std::vector<Card> deal_marks(int from, int to);  // numbers from..to

  void release(Sequence&& seq);
  void release(std::vector<Card>&& cards);
  void release(Card&& card);
  // Consumed sequence shown face-up on its way to the spare pile.
  void discard_face_up(Sequence&& seq, std::string_view tag);
  // Secret-derived scratch cards leave play without being shown.
  void discard_hidden(Sequence&& seq);

  // --- facing ------------------------------------------------------------

  // Ensures face-up; records one RevealEvent per call covering the cards
  // that actually changed state. No-op (and no event) if all already up.
  void turn_over(std::span<Card> cards, std::string_view tag);
  void turn_over(const std::vector<Card*>& cards, std::string_view tag);
  void turn_over(Sequence& seq, std::string_view tag);
  void turn_over(Card& card, std::string_view tag);

  // --- transcript --------------------------------------------------------

  void log_action(std::string tag) {
    if (logging_) transcript_.action(std::move(tag), rng_->group());
  }

  // --- shuffle instrumentation -------------------------------------------

  // Mutation hook: shuffle call #index still logs its action but performs
  // no draw and no permutation. -1 = none.
  void set_skipped_shuffle(int index) { skipped_shuffle_ = index; }
  // Called once per shuffle invocation; false = this one is sabotaged.
  bool next_shuffle_executes() { return shuffle_calls_++ != skipped_shuffle_; }
  int shuffle_calls() const { return shuffle_calls_; }

  // --- block boundaries ----------------------------------------------------

  // Protocols report a digest of their full hidden state at the points
  // where every shuffle's effect has been undone; the enumeration driver
  // asserts these digests are branch-independent.
  void block_boundary(std::string label, std::uint64_t state_digest) {
    boundaries_.emplace_back(std::move(label), state_digest);
  }
  const std::vector<std::pair<std::string, std::uint64_t>>& boundaries() const {
    return boundaries_;
  }

  const Usage& usage() const { return usage_; }

private:
  void count_dealt(const Card& c);
  void count_released(const Card& c);

  RandomSource* rng_;
  Transcript transcript_;
  Usage usage_;
  bool logging_ = true;
  int shuffle_calls_ = 0;
  int skipped_shuffle_ = -1;
  std::vector<std::pair<std::string, std::uint64_t>> boundaries_;
};

// Symbols of a span of cards as transcript text (true symbols; callers
// must only use this for cards that are face-up).
std::string symbols_text(std::span<const Card> cards);

// Scoped draw-group override, restored on destruction.
class GroupGuard {
public:
  GroupGuard(Table& table, std::string group)
      : table_(&table), saved_(table.rng().group()) {
    table_->set_group(std::move(group));
  }
  ~GroupGuard() { table_->set_group(std::move(saved_)); }
  GroupGuard(const GroupGuard&) = delete;
  GroupGuard& operator=(const GroupGuard&) = delete;

private:
  Table* table_;
  std::string saved_;
};

}  // namespace cardzk
