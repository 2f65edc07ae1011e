#pragma once

// Indexed structures: an index structure whose points carry label
// structures, with morphisms given by an index embedding and pointwise label
// embeddings.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "boxram/boxdeg.hpp"
#include "boxram/error.hpp"
#include "boxram/structure.hpp"

namespace boxram {

struct IndexedStructure {
  FinStructure index;
  /// labels[j] is the label of index point j.
  std::vector<FinStructure> labels;

  bool operator==(const IndexedStructure&) const = default;
};

struct IndexedMorphism {
  IndexedStructure source;
  IndexedStructure target;
  std::vector<int> index_map;
  /// label_maps[j] embeds source.labels[j] into target.labels[index_map[j]].
  std::vector<std::vector<int>> label_maps;

  bool operator==(const IndexedMorphism&) const = default;
};

Diagnostics validate_indexed(const IndexedStructure& x, bool allow_empty_labels = false);
Diagnostics validate_morphism(const IndexedMorphism& m);

IndexedMorphism identity_morphism(const IndexedStructure& x);
/// g after h: index map g.index_map o h.index_map, label j map
/// g.label_maps[h.index_map[j]] o h.label_maps[j]. Requires h.target == g.source.
IndexedMorphism compose(const IndexedMorphism& g, const IndexedMorphism& h);

std::vector<IndexedMorphism> enumerate_indexed_embeddings(const IndexedStructure& a, const IndexedStructure& h);
std::uint64_t count_indexed_automorphisms(const IndexedStructure& x);
bool indexed_isomorphic(const IndexedStructure& a, const IndexedStructure& b);

/// The image of an indexed embedding: index vertex set plus, for each index
/// vertex in it, the label vertex set.
struct IndexedCopy {
  std::vector<int> index_vertices;
  std::map<int, std::vector<int>> label_vertices;

  bool operator<(const IndexedCopy& o) const {
    return std::tie(index_vertices, label_vertices) < std::tie(o.index_vertices, o.label_vertices);
  }
  bool operator==(const IndexedCopy&) const = default;
};

/// Distinct images of indexed embeddings, sorted.
std::vector<IndexedCopy> enumerate_indexed_copies(const IndexedStructure& a, const IndexedStructure& h);

IndexedStructure constant_labeling(const FinStructure& index, const FinStructure& label);
bool is_constant(const IndexedStructure& x);

/// Joint embedding: a structure together with an embedding of each input into it.
struct JointEmbedding {
  FinStructure joint;
  std::vector<std::vector<int>> maps;
};
using JepStrategy = std::function<JointEmbedding(const std::vector<FinStructure>&)>;

JointEmbedding jep_disjoint_union(const std::vector<FinStructure>& parts);
/// Every point of an earlier part lies below every point of a later part.
JointEmbedding jep_concatenation(const std::vector<FinStructure>& parts);
/// "disjoint-union", "concatenation", or "auto" (by label signature).
JepStrategy jep_by_name(const std::string& name, const Signature& label_signature);

/// A constant-labelled target (J, A) with A jointly embedding the labels, and
/// the embedding (id, f) of x into it.
IndexedMorphism cofinal_embed(const IndexedStructure& x, const JepStrategy& jep);

/// |Aut(label)|^|index| * |Aut(index)| for a constant labelling.
std::uint64_t indexed_aut_order(const IndexedStructure& x);

/// One structure on pairs (j, a), vertex j * |label| + a for constant labels,
/// with symbols "~" (same index point), "L." + label symbols inside each
/// fiber, and "I." + index symbols lifted to all points of the fibers.
FinStructure flatten(const IndexedStructure& x);

/// Box degree of (a0, labels...) in the ambient, an upper bound for the
/// degree of the constant-indexed structure.
BoxDegreeResult indexed_brd_bound(const FinStructure& a0, const std::vector<FinStructure>& labels,
                                  const FinStructure& ambient, const DegreeTable& table,
                                  bool assume_one = false);

}  // namespace boxram
