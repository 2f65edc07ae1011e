#include "boxram/oracle.hpp"

#include <algorithm>
#include <set>

#include "boxram/error.hpp"

namespace boxram {

std::string to_string(RamseyResult::Verdict v) {
  switch (v) {
    case RamseyResult::Verdict::Holds: return "holds";
    case RamseyResult::Verdict::Fails: return "fails";
    case RamseyResult::Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

struct RamseySearch {
  int m;
  int colors;
  int threshold;
  bool reduce;
  std::uint64_t budget;
  // completes[i]: copies of B whose last copy of A has index i.
  std::vector<std::vector<std::vector<int>>> completes;
  std::vector<int> coloring;
  std::uint64_t nodes = 0;
  bool found = false;
  bool exceeded = false;

  bool good_at(int i) const {
    for (const auto& members : completes[i]) {
      int seen = 0;  // bitmask over colours; colours < 64 is checked up front
      std::uint64_t mask = 0;
      for (int x : members)
        if (!(mask >> coloring[x] & 1u)) {
          mask |= std::uint64_t{1} << coloring[x];
          ++seen;
        }
      if (seen <= threshold) return true;
    }
    return false;
  }

  // Returns true to stop (counterexample found or budget exhausted).
  bool dfs(int i, int used) {
    if (++nodes > budget) {
      exceeded = true;
      return true;
    }
    if (i == m) {
      found = true;
      return true;
    }
    const int limit = reduce ? std::min(colors, used + 1) : colors;
    for (int c = 0; c < limit; ++c) {
      coloring[i] = c;
      if (good_at(i)) continue;
      if (dfs(i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }
};

}  // namespace

RamseyResult exhaustive_ramsey_check(const RamseyInstance& inst, std::uint64_t budget, bool reduce) {
  if (inst.colors < 1 || inst.colors > 64) throw Error("colour count must lie in 1..64");
  if (inst.threshold < 1) throw Error("threshold must be positive");
  require_same_signature(inst.a, inst.b);
  require_same_signature(inst.b, inst.c);
  if (count_embeddings(inst.a, inst.b) == 0) throw Error("A does not embed in B");
  if (count_embeddings(inst.b, inst.c) == 0) throw Error("B does not embed in C");

  RamseyResult res;
  res.a_copies = copy_vertex_sets(inst.a, inst.c);
  const int m = static_cast<int>(res.a_copies.size());
  RamseySearch s{m, inst.colors, inst.threshold, reduce, budget, std::vector<std::vector<std::vector<int>>>(m + 1),
                 std::vector<int>(m, 0)};
  bool trivially_good = false;
  for (const auto& bc : copy_vertex_sets(inst.b, inst.c)) {
    std::vector<int> members;
    for (int x = 0; x < m; ++x)
      if (std::includes(bc.begin(), bc.end(), res.a_copies[x].begin(), res.a_copies[x].end())) members.push_back(x);
    if (members.empty())
      trivially_good = true;
    else
      s.completes[members.back()].push_back(std::move(members));
  }
  if (trivially_good) {
    res.verdict = RamseyResult::Verdict::Holds;
    return res;
  }
  s.dfs(0, 0);
  res.nodes = s.nodes;
  if (s.exceeded) {
    res.verdict = RamseyResult::Verdict::BudgetExceeded;
  } else if (s.found) {
    res.verdict = RamseyResult::Verdict::Fails;
    res.counterexample = s.coloring;
  } else {
    res.verdict = RamseyResult::Verdict::Holds;
  }
  return res;
}

TupleColoring sim_class_coloring(const std::vector<FinStructure>& patterns, const FinStructure& ambient) {
  TupleColoring tc;
  auto cls = std::make_shared<const SimClassifier>(patterns, ambient);
  tc.colors.resize(cls->tuple_count());
  for (std::uint64_t flat = 0; flat < cls->tuple_count(); ++flat) tc.colors[flat] = cls->class_of(flat);
  tc.classifier = std::move(cls);
  return tc;
}

std::vector<int> colors_attained(const TupleColoring& coloring, const std::vector<int>& vertices) {
  std::vector<int> inside = vertices;
  std::sort(inside.begin(), inside.end());
  const auto& cls = *coloring.classifier;
  std::set<int> out;
  for (std::uint64_t flat = 0; flat < cls.tuple_count(); ++flat) {
    const auto idx = cls.unflatten(flat);
    bool ok = true;
    for (std::size_t i = 0; i < idx.size() && ok; ++i) {
      const auto& c = cls.copies(i)[idx[i]];
      ok = std::includes(inside.begin(), inside.end(), c.begin(), c.end());
    }
    if (ok) out.insert(coloring.colors[flat]);
  }
  return {out.begin(), out.end()};
}

PersistenceReport persistence_check(const std::vector<FinStructure>& patterns, const FinStructure& ambient,
                                    const std::vector<std::vector<int>>& trace_copies) {
  SimClassifier cls(patterns, ambient);
  // Trace vertex sets met by each class.
  std::vector<std::set<std::vector<int>>> met(cls.classes().size());
  for (std::uint64_t flat = 0; flat < cls.tuple_count(); ++flat) {
    const auto idx = cls.unflatten(flat);
    std::vector<int> u;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto& c = cls.copies(i)[idx[i]];
      u.insert(u.end(), c.begin(), c.end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    met[cls.class_of(flat)].insert(std::move(u));
  }
  PersistenceReport rep;
  for (auto copy : trace_copies) {
    std::sort(copy.begin(), copy.end());
    for (int v : copy)
      if (v < 0 || v >= ambient.size()) throw Error("trace copy vertex out of range");
    const auto shape = induced(ambient, copy);
    for (std::size_t c = 0; c < cls.classes().size(); ++c) {
      if (static_cast<int>(copy.size()) != cls.classes()[c].trace_pattern.size() ||
          !are_isomorphic(shape, cls.classes()[c].trace_pattern))
        continue;
      ++rep.checked;
      if (!met[c].count(copy)) {
        rep.ok = false;
        rep.missing.emplace_back(static_cast<int>(c), copy);
      }
    }
  }
  return rep;
}

}  // namespace boxram
