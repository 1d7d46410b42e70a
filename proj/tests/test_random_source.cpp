#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cardzk/errors.hpp"
#include "cardzk/random_source.hpp"
#include "doctest.h"

using namespace cardzk;

namespace {

using Fidelity = RandomSource::Fidelity;
using DrawClass = RandomSource::DrawClass;

}  // namespace

TEST_CASE("seeded draws stay in range and are deterministic per seed") {
  RandomSource a = RandomSource::seeded(42);
  RandomSource b = RandomSource::seeded(42);
  RandomSource c = RandomSource::seeded(43);
  bool any_diff = false;
  for (int i = 0; i < 200; ++i) {
    int range = 2 + (i % 7);
    int va = a.draw(range);
    CHECK(va >= 0);
    CHECK(va < range);
    CHECK_EQ(va, b.draw(range));
    if (va != c.draw(range)) any_diff = true;
  }
  CHECK(any_diff);
  CHECK_FALSE(a.enumerated());
}

TEST_CASE("enumeration visits every leaf of a uniform tree exactly once") {
  std::map<std::vector<int>, int> seen;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    std::vector<int> leaf;
    leaf.push_back(rng.draw(3));
    leaf.push_back(rng.draw(2));
    leaf.push_back(rng.draw(4));
    seen[leaf]++;
    CHECK_EQ(rng.leaf_probability(), doctest::Approx(1.0 / 24.0));
  });
  CHECK_EQ(leaves, 24);
  CHECK_EQ(static_cast<int>(seen.size()), 24);
  for (const auto& [path, count] : seen) CHECK_EQ(count, 1);
}

TEST_CASE("enumeration handles ranges that depend on earlier draws") {
  // draw(2) then draw(1 or 3): 1 + 3 = 4 leaves, probabilities 1/2 and 1/6.
  double total = 0.0;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    int first = rng.draw(2);
    rng.draw(first == 0 ? 1 : 3);
    total += rng.leaf_probability();
  });
  CHECK_EQ(leaves, 4);
  CHECK_EQ(total, doctest::Approx(1.0));
}

TEST_CASE("verdict fidelity pins cosmetic draws to zero") {
  OutcomeEnumerator::Options opts;
  opts.fidelity = Fidelity::Verdict;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        rng.draw(3, DrawClass::Core);
        CHECK_EQ(rng.draw(5, DrawClass::Cosmetic), 0);
        rng.draw(2, DrawClass::Core);
      },
      opts);
  CHECK_EQ(leaves, 6);
}

TEST_CASE("focus group branches only matching draws") {
  OutcomeEnumerator::Options opts;
  opts.focus_group = "b";
  std::map<int, double> outcomes;
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        rng.set_group("a");
        CHECK_EQ(rng.draw(4), 0);
        rng.set_group("b");
        int v = rng.draw(3);
        outcomes[v] += rng.leaf_probability();
        rng.set_group("c");
        CHECK_EQ(rng.draw(2), 0);
      },
      opts);
  CHECK_EQ(leaves, 3);
  for (int v = 0; v < 3; ++v) {
    CHECK_EQ(outcomes[v], doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("focus group that matches nothing yields the single pinned leaf") {
  OutcomeEnumerator::Options opts;
  opts.focus_group = "";
  std::int64_t leaves = OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rng) {
        rng.set_group("x");
        CHECK_EQ(rng.draw(6), 0);
        CHECK_EQ(rng.leaf_probability(), doctest::Approx(1.0));
      },
      opts);
  CHECK_EQ(leaves, 1);
}

TEST_CASE("draw log records range, value, class, and group") {
  OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
    rng.set_group("g1");
    rng.draw(2, DrawClass::Core);
    rng.set_group("g2");
    rng.draw(1, DrawClass::Cosmetic);
    const auto& recs = rng.records();
    REQUIRE_EQ(recs.size(), 2u);
    CHECK_EQ(recs[0].range, 2);
    CHECK_EQ(recs[0].group, "g1");
    CHECK_EQ(recs[0].cls, DrawClass::Core);
    CHECK_EQ(recs[1].range, 1);
    CHECK_EQ(recs[1].group, "g2");
    CHECK_EQ(recs[1].cls, DrawClass::Cosmetic);
  });
}

TEST_CASE("leaf cap aborts oversized enumerations") {
  OutcomeEnumerator::Options opts;
  opts.max_leaves = 100;
  CHECK_THROWS_AS(OutcomeEnumerator::for_each_leaf(
                      [](RandomSource& rng) {
                        for (int i = 0; i < 8; ++i) rng.draw(3);
                      },
                      opts),
                  CapacityError);
}

TEST_CASE("invalid draw ranges are rejected") {
  RandomSource rng = RandomSource::seeded(1);
  CHECK_THROWS_AS(rng.draw(0), ProtocolMisuse);
  CHECK_THROWS_AS(rng.draw(-2), ProtocolMisuse);
}
