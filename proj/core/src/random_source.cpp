#include "cardzk/random_source.hpp"

namespace cardzk {

RandomSource RandomSource::seeded(std::uint64_t seed) {
  RandomSource rs;
  rs.enumerated_ = false;
  rs.engine_.seed(seed);
  return rs;
}

bool RandomSource::eligible(DrawClass cls, const std::string& group) const {
  if (fidelity_ == Fidelity::Verdict && cls == DrawClass::Cosmetic) return false;
  if (focus_.has_value() && group != *focus_) return false;
  return true;
}

int RandomSource::draw(int range, DrawClass cls) {
  if (range < 1) throw ProtocolMisuse("draw: range must be >= 1");
  int value = 0;
  if (!enumerated_) {
    std::uniform_int_distribution<int> dist(0, range - 1);
    value = dist(engine_);
  } else {
    size_t idx = records_.size();
    if (idx < path_.size()) {
      value = path_[idx];
      if (value >= range) {
        throw ProtocolMisuse("enumeration: draw tree changed shape under replay");
      }
    } else {
      value = 0;
    }
    if (eligible(cls, group_)) {
      probability_ /= range;
    } else if (value != 0) {
      throw ProtocolMisuse("enumeration: pinned draw took a non-canonical value");
    }
  }
  records_.push_back({range, value, cls, group_});
  return value;
}

std::int64_t OutcomeEnumerator::for_each_leaf(
    const std::function<void(RandomSource&)>& body, const Options& opts) {
  std::vector<int> path;
  std::int64_t leaves = 0;
  for (;;) {
    RandomSource rs;
    rs.enumerated_ = true;
    rs.fidelity_ = opts.fidelity;
    rs.focus_ = opts.focus_group;
    rs.path_ = path;
    body(rs);
    ++leaves;
    if (leaves > opts.max_leaves) {
      throw CapacityError("enumeration: leaf cap exceeded");
    }
    // Backtrack: bump the deepest branchable draw that still has values
    // left; everything after it resets to canonical 0.
    const auto& recs = rs.records();
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(recs.size()) - 1;
    for (; i >= 0; --i) {
      const auto& r = recs[static_cast<size_t>(i)];
      if (rs.eligible(r.cls, r.group) && r.value + 1 < r.range) break;
    }
    if (i < 0) break;
    path.resize(static_cast<size_t>(i) + 1);
    for (std::ptrdiff_t j = 0; j < i; ++j) path[static_cast<size_t>(j)] = recs[static_cast<size_t>(j)].value;
    path[static_cast<size_t>(i)] = recs[static_cast<size_t>(i)].value + 1;
  }
  return leaves;
}

}  // namespace cardzk
