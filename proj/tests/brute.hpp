#pragma once

// Slow reference implementations used as oracles in tests. They only rely on
// FinStructure::holds and plain enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "boxram/structure.hpp"

namespace brute {

using boxram::FinStructure;

/// Calls fn on every tuple in {0..n-1}^arity.
inline void for_each_tuple(int n, int arity, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(arity, 0);
  if (n == 0 && arity > 0) return;
  while (true) {
    fn(t);
    int i = arity - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return;
  }
}

/// f: a -> b preserves and reflects every relation.
inline bool preserves(const FinStructure& a, const FinStructure& b, const std::vector<int>& f) {
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    bool ok = true;
    for_each_tuple(a.size(), a.signature()[s].arity, [&](const std::vector<int>& t) {
      if (!ok) return;
      std::vector<int> img;
      for (int x : t) img.push_back(f[x]);
      if (a.holds(s, t) != b.holds(s, img)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// All injections {0..k-1} -> {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> injections(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(f.size()) == k) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      f.push_back(v);
      rec();
      f.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

inline std::vector<std::vector<int>> embeddings(const FinStructure& a, const FinStructure& b) {
  std::vector<std::vector<int>> out;
  for (const auto& f : injections(a.size(), b.size()))
    if (preserves(a, b, f)) out.push_back(f);
  return out;
}

inline std::set<std::vector<int>> copies(const FinStructure& a, const FinStructure& b) {
  std::set<std::vector<int>> out;
  for (auto f : embeddings(a, b)) {
    std::sort(f.begin(), f.end());
    out.insert(f);
  }
  return out;
}

inline std::uint64_t automorphism_count(const FinStructure& a) { return embeddings(a, a).size(); }

inline bool isomorphic(const FinStructure& a, const FinStructure& b) {
  return a.size() == b.size() && a.signature() == b.signature() && !embeddings(a, b).empty();
}

/// Components of a copy tuple as vertex sets in one ambient.
using Tuple = std::vector<std::vector<int>>;

inline std::vector<int> union_of(const Tuple& t) {
  std::set<int> u;
  for (const auto& c : t) u.insert(c.begin(), c.end());
  return {u.begin(), u.end()};
}

/// Some bijection between the unions preserves the ambient relations and maps
/// component i onto component i.
inline bool tuple_equivalent(const FinStructure& amb1, const Tuple& t1, const FinStructure& amb2, const Tuple& t2) {
  const auto u1 = union_of(t1), u2 = union_of(t2);
  if (u1.size() != u2.size() || t1.size() != t2.size()) return false;
  std::vector<int> perm(u2.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> f(amb1.size(), -1);
    for (std::size_t i = 0; i < u1.size(); ++i) f[u1[i]] = u2[perm[i]];
    bool ok = true;
    for (std::size_t i = 0; i < t1.size() && ok; ++i) {
      std::vector<int> img;
      for (int v : t1[i]) img.push_back(f[v]);
      std::sort(img.begin(), img.end());
      ok = img == t2[i];
    }
    for (std::size_t s = 0; s < amb1.signature().size() && ok; ++s)
      for_each_tuple(static_cast<int>(u1.size()), amb1.signature()[s].arity, [&](const std::vector<int>& t) {
        if (!ok) return;
        std::vector<int> x, y;
        for (int i : t) {
          x.push_back(u1[i]);
          y.push_back(f[u1[i]]);
        }
        if (amb1.holds(s, x) != amb2.holds(s, y)) ok = false;
      });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every tuple of copies, component 0 varying slowest.
inline std::vector<Tuple> all_tuples(const std::vector<FinStructure>& patterns, const FinStructure& ambient) {
  std::vector<std::vector<std::vector<int>>> per;
  for (const auto& p : patterns) {
    const auto c = copies(p, ambient);
    per.emplace_back(c.begin(), c.end());
  }
  std::vector<Tuple> out{{}};
  for (const auto& cs : per) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (const auto& c : cs) {
        auto u = t;
        u.push_back(c);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

/// Number of classes of copy tuples under tuple_equivalent.
inline std::size_t class_count(const std::vector<FinStructure>& patterns, const FinStructure& ambient) {
  std::vector<Tuple> reps;
  for (const auto& t : all_tuples(patterns, ambient)) {
    bool found = false;
    for (const auto& r : reps)
      if (tuple_equivalent(ambient, r, ambient, t)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(t);
  }
  return reps.size();
}

/// Surjections {0..d-1} -> {0..k-1} by listing all maps.
inline std::uint64_t surjections(int d, int k) {
  std::uint64_t count = 0;
  if (k == 0) return d == 0 ? 1 : 0;
  for_each_tuple(k, d, [&](const std::vector<int>& f) {
    std::set<int> img(f.begin(), f.end());
    if (static_cast<int>(img.size()) == k) ++count;
  });
  return count;
}

}  // namespace brute
