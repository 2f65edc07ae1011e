#pragma once

// Brute-force checks of finite Ramsey statements and of class colourings.

#include <cstdint>
#include <memory>
#include <vector>

#include "boxram/boxdeg.hpp"

namespace boxram {

/// For every k-colouring of the copies of A in C there should be a copy of B
/// in C whose copies of A use at most t colours.
struct RamseyInstance {
  FinStructure c, b, a;
  int colors = 2;
  int threshold = 1;
};

struct RamseyResult {
  enum class Verdict { Holds, Fails, BudgetExceeded };
  Verdict verdict = Verdict::Holds;
  /// Copies of A in C, lexicographic; the counterexample colours them.
  std::vector<std::vector<int>> a_copies;
  /// Lexicographically least colouring without a good copy of B (in the
  /// searched space), when the verdict is Fails.
  std::vector<int> counterexample;
  /// Partial colourings visited.
  std::uint64_t nodes = 0;
};

std::string to_string(RamseyResult::Verdict v);

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Depth-first search over colourings of the copies of A in lexicographic
/// order. With `reduce`, colourings are taken up to renaming colours (first
/// occurrences in increasing order). Subtrees are cut as soon as a copy of B
/// is completed with at most t colours.
RamseyResult exhaustive_ramsey_check(const RamseyInstance& inst, std::uint64_t budget = kDefaultBudget,
                                     bool reduce = true);

/// The class of every copy tuple, indexed like SimClassifier flat indices.
struct TupleColoring {
  std::shared_ptr<const SimClassifier> classifier;
  std::vector<int> colors;
};

TupleColoring sim_class_coloring(const std::vector<FinStructure>& patterns, const FinStructure& ambient);

/// Colours of the tuples whose components all lie inside `vertices`.
std::vector<int> colors_attained(const TupleColoring& coloring, const std::vector<int>& vertices);

struct PersistenceReport {
  bool ok = true;
  std::uint64_t checked = 0;
  /// (class index, designated copy) pairs with no member whose trace is that copy.
  std::vector<std::pair<int, std::vector<int>>> missing;
};

/// For every class and every designated vertex set inducing a copy of the
/// class's trace, some member of the class has exactly that trace.
PersistenceReport persistence_check(const std::vector<FinStructure>& patterns, const FinStructure& ambient,
                                    const std::vector<std::vector<int>>& trace_copies);

}  // namespace boxram
