#pragma once

// Relations on copy tuples that are unions of equivalence classes of tuples,
// the equivalence-relation filter, and search for sub-ambients on which a
// given equivalence relation matches a basis member.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "boxram/boxdeg.hpp"

namespace boxram {

/// A union of classes of a fixed classification context.
struct RelationSpec {
  std::shared_ptr<const SimClassifier> context;
  /// Sorted class indices.
  std::vector<int> classes;

  bool contains(int class_index) const;
  /// True iff the tuple's class lies in `classes`. Throws when the tuple is
  /// not classified by the context.
  bool holds(const CopyTuple& t) const;
  bool holds_key(const std::vector<int>& key) const;
};

RelationSpec make_relation(std::shared_ptr<const SimClassifier> context, std::vector<int> classes);

/// Predicate form of a spec.
using TuplePredicate = std::function<bool(const CopyTuple&)>;
TuplePredicate relation_from_classes(const RelationSpec& spec);

/// All 2^m unions of the m classes of d-tuples of points, ordered by number
/// of classes and then lexicographically.
std::vector<RelationSpec> enumerate_canonical_relations(int d, const FinStructure& ambient);
std::vector<RelationSpec> enumerate_canonical_relations(std::shared_ptr<const SimClassifier> context);

/// A point pattern over the ambient's signature (one vertex, no tuples).
FinStructure point_pattern(const FinStructure& ambient);

/// Keeps the binary specs (context of two equal patterns) whose relation on
/// the copies in `test_ambient` is an equivalence. Throws when the test
/// ambient misses a class of triples that occurs in the context ambient.
std::vector<RelationSpec> filter_equivalences(const std::vector<RelationSpec>& specs,
                                              const FinStructure& test_ambient);

/// An equivalence relation on the copies of a pattern in an ambient.
struct EquivRelation {
  FinStructure ambient;
  FinStructure pattern;
  /// Copies of pattern in ambient, lexicographic.
  std::vector<std::vector<int>> carrier;
  /// Blocks of carrier indices.
  std::vector<std::vector<int>> blocks;

  /// Validates that blocks partition the carrier.
  EquivRelation(FinStructure ambient, FinStructure pattern, std::vector<std::vector<int>> blocks);
  /// Builds from a block label per carrier index.
  static EquivRelation from_labels(FinStructure ambient, FinStructure pattern,
                                   const std::vector<int>& labels);

  const std::vector<int>& labels() const { return label_; }

 private:
  std::vector<int> label_;
};

struct CoverWitness {
  std::vector<int> subambient;  // vertex set
  std::size_t basis_index = 0;
};

struct CoverResult {
  std::optional<CoverWitness> witness;
  std::uint64_t subambients_examined = 0;
};

/// Searches target_size-subsets of the ambient in lexicographic order
/// (restricted to copies of `shape` when given) for one on which E agrees
/// with some basis member; returns the first witness. Throws when no
/// sub-ambient of that size (and shape) exists.
CoverResult basis_cover_search(const EquivRelation& e, const std::vector<RelationSpec>& basis,
                               int target_size, const std::optional<FinStructure>& shape = std::nullopt);

}  // namespace boxram
