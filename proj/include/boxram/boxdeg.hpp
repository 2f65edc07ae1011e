#pragma once

// Traces of copy tuples, the component-respecting equivalence of tuples,
// class enumeration with orbit data, and the box degree sum.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxram/structure.hpp"

namespace boxram {

using BigInt = boost::multiprecision::cpp_int;

/// d copies living in one ambient; component i is a copy of pattern i.
struct CopyTuple {
  FinStructure ambient;
  std::vector<Copy> components;
};

/// Sorted union of the component vertex sets.
std::vector<int> trace_vertices(const CopyTuple& t);

/// Induced substructure on the union of the components, in canonical position.
FinStructure trace(const CopyTuple& t);

/// True iff some isomorphism between the traces carries the i-th component
/// of `a` onto the i-th component of `b` for every i.
bool sim_equivalent(const CopyTuple& a, const CopyTuple& b);

/// Complete invariant of a copy tuple up to the equivalence above. Comparable
/// across ambients.
std::vector<int> sim_key(const FinStructure& ambient, std::span<const std::vector<int>* const> parts);
std::vector<int> sim_key(const CopyTuple& t);

struct SimClass {
  /// Trace in canonical position.
  FinStructure trace_pattern;
  /// Lexicographically least decomposition of the canonical trace among all
  /// images under its automorphisms.
  std::vector<std::vector<int>> decomposition;
  /// Size of the Aut(trace_pattern)-orbit of the decomposition.
  std::uint64_t orbit_size = 0;
  std::uint64_t trace_automorphisms = 0;
  /// First member in the enumeration order of tuples.
  CopyTuple representative;
  std::uint64_t member_count = 0;
  std::vector<int> key;
};

/// Enumerates all copy tuples of (patterns) in an ambient and sorts them into
/// classes. Classes are ordered by (trace size, canonical trace, decomposition).
class SimClassifier {
 public:
  SimClassifier(std::vector<FinStructure> patterns, FinStructure ambient);

  const std::vector<FinStructure>& patterns() const { return patterns_; }
  const FinStructure& ambient() const { return ambient_; }
  const std::vector<SimClass>& classes() const { return classes_; }
  std::size_t dimension() const { return patterns_.size(); }

  /// Vertex sets of the copies of pattern i, lexicographic.
  const std::vector<std::vector<int>>& copies(std::size_t i) const { return copies_[i]; }

  std::uint64_t tuple_count() const { return class_of_.size(); }
  /// Component copy indices of the tuple with the given flat index.
  std::vector<std::size_t> unflatten(std::uint64_t flat) const;
  std::uint64_t flatten(std::span<const std::size_t> idx) const;
  int class_of(std::uint64_t flat) const { return class_of_[flat]; }

  /// Class of an arbitrary tuple (possibly in another ambient) by key.
  std::optional<int> classify(const CopyTuple& t) const;
  std::optional<int> classify_key(const std::vector<int>& key) const;

  CopyTuple tuple_at(std::uint64_t flat) const;

 private:
  std::vector<FinStructure> patterns_;
  FinStructure ambient_;
  std::vector<std::vector<std::vector<int>>> copies_;
  std::vector<SimClass> classes_;
  std::vector<int> class_of_;
  std::map<std::vector<int>, int> by_key_;
};

std::vector<SimClass> enumerate_sim_classes(const std::vector<FinStructure>& patterns,
                                            const FinStructure& ambient);

/// Per-class check of how members sit over copies of the trace.
struct FiberReport {
  std::size_t class_index = 0;
  std::size_t trace_copies = 0;   // copies of the trace pattern in the ambient
  std::size_t hosted_copies = 0;  // trace copies that carry at least one member
  std::uint64_t min_fiber = 0;
  std::uint64_t max_fiber = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t trace_automorphisms = 0;

  bool persistent() const { return hosted_copies == trace_copies; }
  bool exact() const { return min_fiber == orbit_size && max_fiber == orbit_size; }
};

std::vector<FiberReport> fiber_analysis(const SimClassifier& classifier);

// ---------------------------------------------------------------------------
// Degree tables and the box degree sum.

enum class Provenance { UserSupplied, ComputedByCodingTree, AssumedOne };
std::string to_string(Provenance p);

struct DegreeEntry {
  FinStructure structure;
  std::uint64_t degree = 1;
  Provenance provenance = Provenance::UserSupplied;
};

/// Degrees keyed by isomorphism class.
class DegreeTable {
 public:
  void set(const FinStructure& s, std::uint64_t degree,
           Provenance provenance = Provenance::UserSupplied);
  std::optional<DegreeEntry> lookup(const FinStructure& s) const;
  std::size_t size() const { return entries_.size(); }
  std::vector<DegreeEntry> entries() const;

 private:
  std::map<std::vector<int>, DegreeEntry> entries_;
};

struct BoxDegreeTerm {
  FinStructure trace;
  std::vector<std::vector<int>> decomposition;
  std::uint64_t degree = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t trace_automorphisms = 0;
  std::uint64_t contribution = 0;
  Provenance provenance = Provenance::UserSupplied;
};

struct BoxDegreeResult {
  /// Sum of degree * orbit_size over classes.
  std::uint64_t value = 0;
  /// Sum of degree * |Aut(trace)| over classes; an upper bound for `value`.
  std::uint64_t aut_weighted_value = 0;
  std::size_t class_count = 0;
  std::vector<BoxDegreeTerm> terms;
};

/// Throws naming the first trace without a table entry unless `assume_one`.
BoxDegreeResult box_degree(const std::vector<FinStructure>& patterns, const FinStructure& ambient,
                           const DegreeTable& table, bool assume_one = false);

// ---------------------------------------------------------------------------
// Counting for the dense linear order.

/// Surjections from a d-set onto a k-set, by inclusion-exclusion.
BigInt surjection_count(int d, int k);
/// Sum of surjection counts over k = 1..d (ordered Bell number).
BigInt omega_box_degree(int d);
/// 2 to the power omega_box_degree(d).
BigInt canonical_relation_count(int d);

}  // namespace boxram
