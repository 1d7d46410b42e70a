#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cardzk {

// The verifier's view of a run: an ordered log of card reveals and public
// physical actions. Hidden shuffle outcomes and prover-private reads never
// appear here; the event constructors simply have no slot for them.
//
// `group` is engine bookkeeping (which draw group was active when the
// event happened, used to factor transcript distributions); it is not part
// of the view itself, so serialization, digests and equality ignore it.
struct TranscriptEvent {
  enum class Kind : std::uint8_t { Reveal, Action };
  Kind kind;
  std::string tag;      // public location, e.g. "r1.v2.count.row1"
  std::string symbols;  // revealed symbols, empty for actions
  std::string group;

  bool operator==(const TranscriptEvent& o) const {
    return kind == o.kind && tag == o.tag && symbols == o.symbols;
  }
};

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ull);

class Transcript {
public:
  void reveal(std::string tag, std::string symbols, std::string group = {});
  void action(std::string tag, std::string group = {});

  const std::vector<TranscriptEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  // Line-oriented: "REVEAL <tag> <symbols>" / "ACTION <tag>".
  std::string serialize() const;
  std::uint64_t digest() const;
  // Digest over just the events belonging to one draw group.
  std::uint64_t group_digest(const std::string& group) const;

  bool operator==(const Transcript& o) const { return events_ == o.events_; }

private:
  std::vector<TranscriptEvent> events_;
};

}  // namespace cardzk
