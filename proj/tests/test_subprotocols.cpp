#include <cstdint>
#include <utility>
#include <vector>

#include "cardzk/cards.hpp"
#include "cardzk/errors.hpp"
#include "cardzk/matrix.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/subprotocols.hpp"
#include "cardzk/table.hpp"
#include "doctest.h"

using namespace cardzk;

namespace {

// All value vectors in [0,k)^m, visited in counter order.
bool next_values(std::vector<int>& v, int k) {
  for (size_t i = v.size(); i-- > 0;) {
    if (++v[i] < k) return true;
    v[i] = 0;
  }
  return false;
}

int brute_force_matches(const std::vector<int>& values) {
  int t = 0;
  for (size_t r = 1; r < values.size(); ++r)
    if (values[r] == values[0]) ++t;
  return t;
}

CardMatrix matrix_of(const std::vector<int>& values, int k, Table& table) {
  std::vector<Sequence> rows;
  for (int v : values) rows.push_back(table.deal_encoding(v, k));
  return CardMatrix::from_rows(std::move(rows));
}

void check_counts(int m, int k, RandomSource::Fidelity fidelity) {
  std::vector<int> values(static_cast<size_t>(m), 0);
  do {
    OutcomeEnumerator::Options opts;
    opts.fidelity = fidelity;
    OutcomeEnumerator::for_each_leaf(
        [&](RandomSource& rng) {
          Table table(rng, /*logging=*/false);
          CardMatrix cm = matrix_of(values, k, table);
          int t = neighbor_count(cm, table, "count");
          CHECK_EQ(t, brute_force_matches(values));
          // Matrix handed back restored and face down.
          for (int r = 0; r < m; ++r) {
            Sequence row = cm.take_row(r);
            CHECK_EQ(decode(row), values[static_cast<size_t>(r)]);
            CHECK(row.all_down());
            cm.place_row(r, std::move(row));
          }
        },
        opts);
  } while (next_values(values, k));
}

}  // namespace

TEST_CASE("neighbor count matches brute force on every exact shuffle outcome") {
  for (int m = 2; m <= 3; ++m)
    for (int k = 2; k <= 3; ++k) check_counts(m, k, RandomSource::Fidelity::Exact);
}

TEST_CASE("neighbor count matches brute force across all m<=5 k<=4 contents") {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k) check_counts(m, k, RandomSource::Fidelity::Verdict);
}

TEST_CASE("selection extracts the candidate named by the selector") {
  for (int k = 2; k <= 4; ++k) {
    for (int b = 0; b < k; ++b) {
      for (int shift = 0; shift < k; ++shift) {
        std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
          Table table(rng, /*logging=*/false);
          std::vector<Sequence> cands;
          for (int i = 0; i < k; ++i)
            cands.push_back(table.deal_encoding((i + shift) % k, k));
          auto [picked, ctx] =
              select_sequence(std::move(cands), table.deal_encoding(b, k), table, "sel");
          CHECK_EQ(decode(picked), (b + shift) % k);
          ctx.put_back(std::move(picked));
          restore_selection(ctx, table);
          CHECK_EQ(decode(ctx.take_selector()), b);
          std::vector<Sequence> back = ctx.take_candidates();
          REQUIRE_EQ(static_cast<int>(back.size()), k);
          for (int i = 0; i < k; ++i)
            CHECK_EQ(decode(back[static_cast<size_t>(i)]), (i + shift) % k);
        });
        CHECK_EQ(leaves, k * k);  // one hidden shift out, one back
      }
    }
  }
}

TEST_CASE("selection rejects a selector that shows more than one heart") {
  RandomSource rng = RandomSource::seeded(5);
  Table table(rng, /*logging=*/false);
  std::vector<Sequence> cands;
  cands.push_back(table.deal_encoding(0, 2));
  cands.push_back(table.deal_encoding(1, 2));
  Sequence bad = table.deal_pattern({Suit::Heart, Suit::Heart});
  CHECK_THROWS_AS(select_sequence(std::move(cands), std::move(bad), table, "sel"),
                  VerifierReject);
}

TEST_CASE("addition is modular for every pair in k = 2, 3, 9") {
  for (int k : {2, 3, 9}) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
          Table table(rng, /*logging=*/false);
          Sequence sum = add_sequences(table.deal_encoding(a, k),
                                       table.deal_encoding(b, k), table, "add");
          CHECK_EQ(decode(sum), (a + b) % k);
          table.release(std::move(sum));
          CHECK_EQ(table.usage().encoding_in_play, 0);
        });
        CHECK_EQ(leaves, k);
      }
    }
  }
}

TEST_CASE("multiplication is modular for every pair, enumerated at k = 2, 3") {
  for (int k : {2, 3}) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
          Table table(rng, /*logging=*/false);
          Sequence prod = multiply_sequences(table.deal_encoding(a, k),
                                             table.deal_encoding(b, k), table, "mul");
          CHECK_EQ(decode(prod), (a * b) % k);
        });
      }
    }
  }
}

TEST_CASE("multiplication is modular for every pair at k = 9, seeded") {
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        RandomSource rng = RandomSource::seeded(seed * 81 + static_cast<unsigned>(a * 9 + b));
        Table table(rng, /*logging=*/false);
        Sequence prod = multiply_sequences(table.deal_encoding(a, 9),
                                           table.deal_encoding(b, 9), table, "mul");
        CHECK_EQ(decode(prod), (a * b) % 9);
      }
    }
  }
}

TEST_CASE("copying preserves the value in all copies for k <= 5") {
  for (int k = 2; k <= 5; ++k) {
    for (int x = 0; x < k; ++x) {
      for (int copies = 1; copies <= 3; ++copies) {
        std::int64_t leaves = OutcomeEnumerator::for_each_leaf([&](RandomSource& rng) {
          Table table(rng, /*logging=*/false);
          std::vector<Sequence> out =
              copy_sequence(table.deal_encoding(x, k), copies, table, "copy");
          REQUIRE_EQ(static_cast<int>(out.size()), copies + 1);
          for (Sequence& s : out) {
            CHECK_EQ(decode(s), x);
            CHECK(s.all_down());
          }
        });
        CHECK_EQ(leaves, k);
      }
    }
  }
}
