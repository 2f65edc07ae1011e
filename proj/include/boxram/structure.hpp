#pragma once

// Finite relational structures over an explicit signature, together with the
// embedding / copy / automorphism / isomorphism machinery used everywhere
// else. The universe of a structure of size n is always {0, ..., n-1}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxram {

struct Symbol {
  std::string name;
  int arity = 2;

  bool operator==(const Symbol&) const = default;
};

/// An ordered list of relation symbols with pairwise distinct names.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws when the symbol is absent.
  std::size_t index_of(std::string_view name) const;
  bool all_binary() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

using Tuple = std::vector<int>;

/// Immutable finite structure. Copies share storage.
class FinStructure {
 public:
  FinStructure();
  /// `relations[s]` holds the tuples of symbol s. Tuples are sorted and
  /// deduplicated; arity and range are validated.
  FinStructure(Signature signature, int size,
               std::vector<std::vector<Tuple>> relations);
  /// Same, keyed by symbol name. Missing names mean empty relations.
  static FinStructure from_named(Signature signature, int size,
                                 const std::map<std::string, std::vector<Tuple>>& relations);

  const Signature& signature() const;
  int size() const;
  const std::vector<Tuple>& tuples(std::size_t symbol) const;
  std::size_t tuple_count() const;

  bool holds(std::size_t symbol, std::span<const int> tuple) const;
  bool holds(std::size_t symbol, int x) const;
  bool holds(std::size_t symbol, int x, int y) const;

  bool operator==(const FinStructure& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// A candidate map from `source` into `target`; map[i] is the image of i.
struct Embedding {
  FinStructure source;
  FinStructure target;
  std::vector<int> map;
};

/// The vertex set of an induced substructure of `ambient` isomorphic to
/// `pattern`.
struct Copy {
  FinStructure ambient;
  std::vector<int> vertices;
  FinStructure pattern;
};

// ---------------------------------------------------------------------------
// Builders for the structures that show up in tests and examples.

Signature order_signature();  // one binary symbol "<"
Signature graph_signature();  // one binary symbol "E"

/// n-element strict linear order 0 < 1 < ... < n-1.
FinStructure linear_order(int n);
/// n points with the order signature and no tuples.
FinStructure order_antichain(int n);
/// Undirected graph; every edge is stored in both orientations.
FinStructure graph(int n, const std::vector<std::pair<int, int>>& edges);
FinStructure complete_graph(int n);
FinStructure empty_graph(int n);
FinStructure path_graph(int n);
FinStructure cycle_graph(int n);
/// n points over the empty signature.
FinStructure bare_set(int n);

// ---------------------------------------------------------------------------
// Core operations.

/// True iff `map` is injective and preserves every relation in both
/// directions. Throws on signature mismatch, wrong length or out-of-range
/// images.
bool is_embedding(std::span<const int> map, const FinStructure& a, const FinStructure& b);

/// All embeddings of `a` into `b` in lexicographic order of the map.
std::vector<Embedding> enumerate_embeddings(const FinStructure& a, const FinStructure& b);

/// Number of embeddings, without materialising them.
std::uint64_t count_embeddings(const FinStructure& a, const FinStructure& b);

/// All copies of `a` in `b`, sorted lexicographically by vertex set.
std::vector<Copy> enumerate_copies(const FinStructure& a, const FinStructure& b);

/// Vertex sets only; same order as enumerate_copies.
std::vector<std::vector<int>> copy_vertex_sets(const FinStructure& a, const FinStructure& b);

/// The full automorphism group as sorted permutations (perm[i] = image of i).
std::vector<std::vector<int>> automorphisms(const FinStructure& a);

/// An isomorphism a -> b if one exists.
std::optional<std::vector<int>> find_isomorphism(const FinStructure& a, const FinStructure& b);
bool are_isomorphic(const FinStructure& a, const FinStructure& b);

/// Induced substructure on `vertices`, relabelled 0..k-1 in increasing order
/// of the given vertices.
FinStructure induced(const FinStructure& b, std::span<const int> vertices);

/// Structure with universe renamed by perm (old vertex i becomes perm[i]).
FinStructure relabel(const FinStructure& a, std::span<const int> perm);

/// Disjoint union with b's vertices shifted by a.size(). Signatures must match.
FinStructure disjoint_union(const FinStructure& a, const FinStructure& b);

void require_same_signature(const FinStructure& a, const FinStructure& b);

// ---------------------------------------------------------------------------
// Canonical forms.

/// A complete isomorphism invariant for a (vertex-coloured) induced
/// substructure. `relabel[i]` is the canonical label of the i-th selected
/// vertex.
struct CanonicalForm {
  std::vector<int> code;
  std::vector<int> relabel;
};

/// Canonical form of the whole structure.
CanonicalForm canonical_form(const FinStructure& a);

/// Canonical form of the substructure induced on `vertices` with the given
/// per-vertex colours. Isomorphisms are required to preserve colours.
CanonicalForm canonical_form(const FinStructure& a, std::span<const int> vertices,
                             std::span<const int> colors);

/// The structure relabelled into canonical position.
FinStructure canonical_structure(const FinStructure& a);

// ---------------------------------------------------------------------------
// Small censuses of structures, up to isomorphism, in canonical position.

/// Undirected loopless graphs on n vertices.
std::vector<FinStructure> graphs_up_to_iso(int n);
/// Loopless structures with one binary relation "E" on n vertices (n <= 4).
std::vector<FinStructure> digraphs_up_to_iso(int n);
/// Tournaments with relation "<" (every pair in exactly one direction), all
/// labelled ones.
std::vector<FinStructure> labelled_tournaments(int n);

}  // namespace boxram
