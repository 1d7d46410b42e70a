#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cardzk/errors.hpp"

namespace cardzk {

// Hidden-randomness supplier for shuffles and private prover coins.
//
// SEEDED mode draws uniformly from a PRNG. ENUMERATED mode is driven by
// OutcomeEnumerator, which walks the draw tree depth-first; a draw is
// "branched" (all values explored, probability 1/range) when it is
// eligible under the current fidelity/focus, and pinned to the canonical
// value 0 otherwise. Leaf probability is the product over branched draws.
//
// Fidelity::Exact branches every draw. Fidelity::Verdict pins Cosmetic
// draws: outcomes that provably cannot change the verdict or the end
// state of their block (mark reveal orders, display scrambles, free
// prover picks); the block-digest checks in the driver back that claim.
class RandomSource {
public:
  enum class DrawClass : std::uint8_t { Core, Cosmetic };
  enum class Fidelity : std::uint8_t { Exact, Verdict };

  struct Record {
    int range;
    int value;
    DrawClass cls;
    std::string group;
  };

  static RandomSource seeded(std::uint64_t seed);

  bool enumerated() const { return enumerated_; }
  Fidelity fidelity() const { return fidelity_; }

  // Uniform in [0, range).
  int draw(int range, DrawClass cls = DrawClass::Core);

  // Label for the draws that follow; one group = one independently
  // enumerable protocol block.
  void set_group(std::string g) { group_ = std::move(g); }
  const std::string& group() const { return group_; }

  const std::vector<Record>& records() const { return records_; }
  double leaf_probability() const { return probability_; }

private:
  RandomSource() = default;

  bool eligible(DrawClass cls, const std::string& group) const;

  bool enumerated_ = false;
  Fidelity fidelity_ = Fidelity::Exact;
  // Empty optional: no focus (branch everything eligible by class).
  // Non-empty: branch only draws whose group matches.
  std::optional<std::string> focus_;
  std::mt19937_64 engine_;
  std::vector<int> path_;  // prescribed values for the first draws
  std::vector<Record> records_;
  std::string group_ = "setup";
  double probability_ = 1.0;

  friend class OutcomeEnumerator;
};

// Depth-first walk over all leaves of the (possibly restricted) draw tree.
// The body is re-run once per leaf with a fresh RandomSource following a
// prescribed value path; ranges may depend on history (the tree need not
// be uniform).
class OutcomeEnumerator {
public:
  struct Options {
    RandomSource::Fidelity fidelity = RandomSource::Fidelity::Exact;
    std::optional<std::string> focus_group;  // see RandomSource
    std::int64_t max_leaves = 50'000'000;
  };

  // Calls body once per leaf. After each call the RandomSource exposes the
  // draw log and the leaf probability.
  static std::int64_t for_each_leaf(const std::function<void(RandomSource&)>& body,
                                    const Options& opts);
  static std::int64_t for_each_leaf(const std::function<void(RandomSource&)>& body) {
    return for_each_leaf(body, Options{});
  }
};

}  // namespace cardzk
