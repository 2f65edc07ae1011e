#pragma once

// Coding trees of enumerated structures in a language of irreflexive binary
// relations, decoding of antichains, diagonal trees and their counting, plus
// search harnesses for point partitions and colourings.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boxram/structure.hpp"

namespace boxram {

using Word = std::vector<int>;

/// Assigns a letter to every ordered pair of distinct points. A pair type is
/// a bitmask with bit 2s set when symbol s holds forwards and bit 2s+1 when it
/// holds backwards.
class LetterScheme {
 public:
  enum class Kind { Order, Graph, Colored, Custom };

  /// Order signature; letter 0 is ">" and letter 1 is "<".
  static LetterScheme order();
  /// Graph signature; letter 0 is a non-edge and letter 1 an edge.
  static LetterScheme graph();
  /// Complete graphs with edges coloured by symbols C0..C(l-1); letter j is colour j.
  static LetterScheme colored(int l);
  /// Parses "order", "graph" or "colored:<l>".
  static LetterScheme by_name(const std::string& name);

  /// masks[j] is the pair type of letter j. The set of masks must be closed
  /// under reversing pairs.
  LetterScheme(std::string name, Kind kind, Signature signature, std::vector<std::string> letter_names,
               std::vector<std::uint32_t> masks);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  const Signature& signature() const { return sig_; }
  int alphabet_size() const { return static_cast<int>(masks_.size()); }
  const std::vector<std::string>& letter_names() const { return letter_names_; }
  std::uint32_t mask(int letter) const { return masks_.at(letter); }
  /// Letter of (y, x) given the letter of (x, y).
  int converse(int letter) const { return converse_.at(letter); }

  std::uint32_t pair_type(const FinStructure& a, int x, int y) const;
  std::optional<int> find_letter(const FinStructure& a, int x, int y) const;
  /// Throws when the pair has no letter.
  int letter(const FinStructure& a, int x, int y) const;
  /// Checks signature, binarity, irreflexivity and that every pair has a letter.
  void validate(const FinStructure& a) const;

  /// Structure on n points where (k, i), k < i, has letter letters[k][i].
  FinStructure structure_from_letters(int n, const std::vector<std::vector<int>>& letters) const;

 private:
  std::string name_;
  Kind kind_;
  Signature sig_;
  std::vector<std::string> letter_names_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> converse_;
};

struct CodingTree {
  int alphabet_size = 0;
  /// coding_nodes[i] has length i; coding_nodes[i][k] is the letter of (v_k, v_i).
  std::vector<Word> coding_nodes;
  /// Prefix closure of the coding nodes, ordered by length then lexicographically.
  std::vector<Word> nodes;
};

/// order[i] is the point enumerated i-th.
CodingTree build_coding_tree(const FinStructure& a, const std::vector<int>& order, const LetterScheme& scheme);

/// Decodes words of pairwise distinct lengths: with the words sorted by
/// length, point k relates to a later point i by the letter word_i[|word_k|].
FinStructure decode_nodes(const std::vector<Word>& words, const LetterScheme& scheme);
/// As decode_nodes, additionally requiring pairwise incomparable words.
FinStructure decode_antichain(const std::vector<Word>& words, const LetterScheme& scheme);

/// Moves coding nodes to distinct levels as an antichain: node k gets length
/// 2k+1, carries its letters at odd positions and a marker letter 1 at
/// position 2k, with 0 at the other even positions.
std::vector<Word> to_antichain(const std::vector<Word>& coding_nodes);

bool is_prefix(const Word& a, const Word& b);

// ---------------------------------------------------------------------------
// Ordered structures.

struct OrderedStructure {
  FinStructure base;
  /// order[i] is the i-th point.
  std::vector<int> order;

  /// The base relabelled so that the i-th point becomes i.
  FinStructure ordered() const;
};

/// One representative per ordered isomorphism class: the lexicographically
/// least enumeration in each class, classes in order of their representative.
std::vector<OrderedStructure> enumerate_ordered_iso_classes(const FinStructure& a);

// ---------------------------------------------------------------------------
// Diagonal trees.

struct TreeLevel {
  enum class Kind { Branch, Terminal };
  Kind kind = Kind::Terminal;
  /// Branch: the splitting group (bitmask of terminal ranks). Terminal: the
  /// singleton group of the terminal.
  std::uint32_t group = 0;
  /// Branch: the two child groups with their letters, ordered by letter.
  std::vector<std::pair<std::uint32_t, int>> children;
  /// Terminal: rank of the ending node.
  int terminal = -1;
  /// Terminal: letter passed by each other live group, ordered by mask.
  std::vector<std::pair<std::uint32_t, int>> passing;
};

/// A diagonal tree up to isomorphism preserving letters and the order of
/// levels. Terminals are ranked by length. Passing letters of non-branching
/// nodes are recorded at terminal levels only.
struct DiagonalTree {
  int n = 0;
  int alphabet_size = 0;
  std::vector<TreeLevel> levels;

  std::vector<int> code() const;
  /// Structure encoded by the terminals, ranked by length.
  FinStructure decode(const LetterScheme& scheme) const;
  /// A realisation as words: one per terminal, levels at positions 0..2n-2,
  /// letter 0 where the tree records nothing.
  std::vector<Word> words() const;
  /// Checks the defining conditions on words(): n incomparable terminals,
  /// binary splits, distinct critical lengths, 2n-1 levels. Returns an empty
  /// string on success.
  std::string check() const;
};

/// The diagonal tree spanned by an antichain of words, or nullopt when the
/// words are comparable, share a critical level or split more than two ways.
std::optional<DiagonalTree> antichain_type(const std::vector<Word>& words, int alphabet_size);

/// All diagonal trees decoding to the ordered structure, without any
/// realisability condition; ordered by code.
std::vector<DiagonalTree> enumerate_diagonal_trees_unfiltered(const OrderedStructure& a,
                                                              const LetterScheme& scheme);

struct OracleConfig {
  int points = 40;
  int sub_points = 30;
  int samples = 8;
  std::uint64_t seed = 1;
};

/// Enumeration standing in for the limit: a bit-reversal dense order for the
/// order scheme, otherwise independent uniform letters for every pair.
FinStructure generic_enumeration(const LetterScheme& scheme, int points, std::uint64_t seed);

/// Codes of n-element diagonal antichains of coding nodes in the coding tree
/// of the generic enumeration that also occur within every sampled
/// sub-enumeration.
struct RealizableTypes {
  OracleConfig config;
  int n = 0;
  std::set<std::vector<int>> full;
  std::set<std::vector<int>> persistent;
};
RealizableTypes realizable_types(const LetterScheme& scheme, int n, const OracleConfig& config);

struct DiagonalCount {
  OrderedStructure ordered;
  std::vector<DiagonalTree> unfiltered;
  std::vector<DiagonalTree> realizable;
};

std::vector<DiagonalTree> enumerate_diagonal_trees(const OrderedStructure& a, const LetterScheme& scheme,
                                                   const OracleConfig& config = {});

struct CdpDegree {
  std::uint64_t value = 0;        // realisable trees summed over ordered classes
  std::uint64_t unfiltered = 0;   // all trees summed over ordered classes
  std::vector<DiagonalCount> classes;
  OracleConfig config;
};

CdpDegree cdp_degree(const FinStructure& a, const LetterScheme& scheme, const OracleConfig& config = {});

// ---------------------------------------------------------------------------
// Saturation and partition harnesses.

struct DuplicationEntry {
  int x = 0, y = 0;
  int i = 0;  // letter of (x, y)
  int j = 0;  // required letter of (z, y)
  std::uint64_t witnesses = 0;  // z with letter(x, z) = i and letter(z, y) = j
};

struct DuplicationReport {
  std::uint64_t min_required = 0;
  std::uint64_t checked = 0;
  std::vector<DuplicationEntry> flagged;
  bool passed() const { return flagged.empty(); }
};

DuplicationReport free_duplication_report(const FinStructure& ambient, const LetterScheme& scheme,
                                          std::uint64_t m);

struct PartitionSearchResult {
  enum class Verdict { Equality, Trivial, Injective, None };
  Verdict verdict = Verdict::None;
  std::vector<int> witness;
  std::uint64_t copies_examined = 0;
};
std::string to_string(PartitionSearchResult::Verdict v);

/// First copy of `target` (lexicographic) on which the partition, given as a
/// block label per point, is either injective or constant.
PartitionSearchResult dichotomy_search(const FinStructure& ambient, const std::vector<int>& labels,
                                       const FinStructure& target);
/// Same over all k-subsets of points.
PartitionSearchResult dichotomy_search(const FinStructure& ambient, const std::vector<int>& labels, int k);

/// First copy of `target` on which the colouring is injective. Throws when a
/// colour has more than `fiber_bound` points.
PartitionSearchResult rainbow_search(const FinStructure& ambient, const std::vector<int>& colors,
                                     const FinStructure& target, std::uint64_t fiber_bound);

}  // namespace boxram
