#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cardzk {

// Small-n helpers used to index permutations and heart placements when
// enumerating shuffle outcomes. Ranges stay within int for n <= 9 (9! =
// 362880), which is all the engine ever enumerates.

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::int64_t binomial(int n, int t) {
  if (t < 0 || t > n) return 0;
  std::int64_t b = 1;
  for (int i = 0; i < t; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// index -> permutation of {0..n-1} in Lehmer-code order.
inline std::vector<int> nth_permutation(int n, std::int64_t index) {
  std::vector<int> pool;
  pool.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool.push_back(i);
  std::vector<int> perm;
  perm.reserve(static_cast<size_t>(n));
  std::int64_t rem = index;
  for (int i = n; i >= 1; --i) {
    std::int64_t f = factorial(i - 1);
    auto pick = static_cast<size_t>(rem / f);
    rem %= f;
    if (pick >= pool.size()) throw std::domain_error("nth_permutation: index out of range");
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return perm;
}

// index -> the index-th t-subset of {0..n-1} in colexicographic-ish
// (combinadic) order, returned as sorted positions.
inline std::vector<int> nth_combination(int n, int t, std::int64_t index) {
  std::vector<int> positions;
  positions.reserve(static_cast<size_t>(t));
  std::int64_t rem = index;
  int next = 0;
  for (int picked = 0; picked < t; ++picked) {
    for (int v = next; v < n; ++v) {
      std::int64_t block = binomial(n - v - 1, t - picked - 1);
      if (rem < block) {
        positions.push_back(v);
        next = v + 1;
        break;
      }
      rem -= block;
    }
  }
  if (static_cast<int>(positions.size()) != t) {
    throw std::domain_error("nth_combination: index out of range");
  }
  return positions;
}

}  // namespace cardzk
