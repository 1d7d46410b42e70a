#pragma once

#include <stdexcept>
#include <string>

namespace cardzk {

// Engine misuse: the calling code violated a protocol precondition
// (shuffling face-up cards, restoring a selection twice, ...). These are
// bugs in the driver, never normal protocol outcomes.
class ProtocolMisuse : public std::logic_error {
public:
  explicit ProtocolMisuse(const std::string& what) : std::logic_error(what) {}
};

// A sequence whose true symbols do not encode any integer (zero or
// multiple hearts). Raised by decode() and friends.
class MalformedSequence : public std::runtime_error {
public:
  explicit MalformedSequence(const std::string& what) : std::runtime_error(what) {}
};

// Thrown while a verification run is in progress when the verifier sees
// something that forces rejection (wrong count, malformed reveal, missing
// club, ...). Caught at the protocol boundary and converted to a Verdict;
// it is normal control flow, not an error.
class VerifierReject : public std::runtime_error {
public:
  VerifierReject(std::string where, std::string why)
      : std::runtime_error(where + ": " + why),
        where_(std::move(where)),
        why_(std::move(why)) {}
  const std::string& where() const { return where_; }
  const std::string& why() const { return why_; }

private:
  std::string where_;
  std::string why_;
};

// Malformed input file (graph, subgraph, grid, solution).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for an exhaustive mode (enumeration caps, solver caps).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Outcome of a verification protocol run.
struct Verdict {
  bool accepted = false;
  std::string where;  // empty when accepted
  std::string why;

  static Verdict accept() { return {true, "", ""}; }
  static Verdict reject(std::string where, std::string why) {
    return {false, std::move(where), std::move(why)};
  }
};

}  // namespace cardzk
