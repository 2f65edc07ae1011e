#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace boxram {

/// Calls `fn(subset)` for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when `fn` returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls `fn(rgs)` for every set partition of {0..n-1}, given as a restricted
/// growth string (block of element i is rgs[i], blocks numbered by first
/// occurrence). Partitions are visited in lexicographic order of the string.
template <typename Fn>
bool for_each_set_partition(int n, Fn&& fn) {
  if (n == 0) {
    std::vector<int> empty;
    return fn(static_cast<const std::vector<int>&>(empty)) != false;
  }
  std::vector<int> rgs(n, 0), maxp(n, 0);
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(rgs))) return false;
    int i = n - 1;
    while (i > 0 && rgs[i] == maxp[i - 1] + 1) --i;
    if (i == 0) return true;
    ++rgs[i];
    maxp[i] = std::max(maxp[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxp[j] = maxp[j - 1];
    }
  }
}

/// Converts a restricted growth string into explicit blocks.
inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
    if (rgs[i] >= static_cast<int>(blocks.size())) blocks.resize(rgs[i] + 1);
    blocks[rgs[i]].push_back(i);
  }
  return blocks;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace boxram
