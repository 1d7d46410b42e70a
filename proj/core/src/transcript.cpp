#include "cardzk/transcript.hpp"

namespace cardzk {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

void Transcript::reveal(std::string tag, std::string symbols, std::string group) {
  events_.push_back({TranscriptEvent::Kind::Reveal, std::move(tag), std::move(symbols),
                     std::move(group)});
}

void Transcript::action(std::string tag, std::string group) {
  events_.push_back({TranscriptEvent::Kind::Action, std::move(tag), "", std::move(group)});
}

std::string Transcript::serialize() const {
  std::string out;
  for (const auto& ev : events_) {
    if (ev.kind == TranscriptEvent::Kind::Reveal) {
      out += "REVEAL ";
      out += ev.tag;
      out += ' ';
      out += ev.symbols;
    } else {
      out += "ACTION ";
      out += ev.tag;
    }
    out += '\n';
  }
  return out;
}

namespace {
std::uint64_t mix_event(const TranscriptEvent& ev, std::uint64_t h) {
  unsigned char k = ev.kind == TranscriptEvent::Kind::Reveal ? 1 : 2;
  h = fnv1a64(&k, 1, h);
  h = fnv1a64(ev.tag.data(), ev.tag.size(), h);
  h = fnv1a64(ev.symbols.data(), ev.symbols.size(), h);
  return h;
}
}  // namespace

std::uint64_t Transcript::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& ev : events_) h = mix_event(ev, h);
  return h;
}

std::uint64_t Transcript::group_digest(const std::string& group) const {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& ev : events_)
    if (ev.group == group) h = mix_event(ev, h);
  return h;
}

}  // namespace cardzk
