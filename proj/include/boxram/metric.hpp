#pragma once

// Finite metric spectra with exact rational distances, block decompositions,
// the ~ partition of a metric space, and the encoding of spaces over
// admissible spectra as indexed edge-coloured complete graphs.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "boxram/error.hpp"
#include "boxram/indexed.hpp"
#include "boxram/structure.hpp"

namespace boxram {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", integers and finite decimals such as "2.5".
Rational parse_rational(const std::string& text);
/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the distances; throws on duplicates or non-positive values.
  explicit Spectrum(std::vector<Rational> distances);

  const std::vector<Rational>& distances() const { return d_; }
  std::size_t size() const { return d_.size(); }
  const Rational& operator[](std::size_t i) const { return d_[i]; }
  /// Position of a distance, or -1.
  int index_of(const Rational& r) const;

 private:
  std::vector<Rational> d_;
};

using Block = std::vector<Rational>;

/// B_1 holds the members at most twice the minimum; the rest is decomposed
/// the same way.
std::vector<Block> block_decompose(const Spectrum& s);
/// 2 max(earlier) < min(later). Throws unless the blocks are disjoint and in
/// increasing order.
bool is_independent(const Block& earlier, const Block& later);
bool is_simple(const Spectrum& s);
/// Block index of a distance, or -1.
int block_of(const std::vector<Block>& blocks, const Rational& r);

struct MetricSpace {
  int n = 0;
  std::vector<std::vector<Rational>> d;
};

Diagnostics validate_metric(const MetricSpace& x, const Spectrum& s);

/// Classes of x ~ y iff x = y or d(x, y) lies in B_1, ordered by least
/// point. Throws if the relation is not transitive.
std::vector<std::vector<int>> sim_partition(const MetricSpace& x, const Spectrum& s);

/// k for a simple spectrum whose blocks have sizes k-1, 1, ..., 1; throws
/// otherwise.
int admissible_k(const Spectrum& s);

/// Signature of edge-coloured complete graphs with colours C0..C(l-1).
Signature colored_signature(int l);

struct EncodedSpace {
  IndexedStructure structure;
  /// classes[i][a] is the point of the space carried by label vertex a of
  /// index point i.
  std::vector<std::vector<int>> classes;
};

/// Index points are the ~ classes; two classes get colour C(j-1) when their
/// points lie at distance s_(k-1+j); inside a class, colour C(j-1) means
/// distance s_j.
EncodedSpace encode_F(const MetricSpace& x, const Spectrum& s);
/// Inverse of encode_F; points are listed by index point, then label vertex.
/// Throws when the result violates the triangle inequality.
MetricSpace decode_F(const IndexedStructure& y, const Spectrum& s);

/// The space as a structure with one symmetric relation per distance.
FinStructure metric_structure(const MetricSpace& x, const Spectrum& s);
bool is_isometric_embedding(const std::vector<int>& f, const MetricSpace& x, const MetricSpace& y);
bool are_isometric(const MetricSpace& x, const MetricSpace& y, const Spectrum& s);
/// The indexed morphism induced by an isometric embedding.
IndexedMorphism lift_embedding(const std::vector<int>& f, const EncodedSpace& x, const EncodedSpace& y);

/// Random simple spectrum with `blocks` blocks; block sizes are drawn from 1..max_block.
Spectrum random_simple_spectrum(std::mt19937_64& rng, int blocks, int max_block);
/// Random simple spectrum with block sizes k-1, 1, ..., 1.
Spectrum random_admissible_spectrum(std::mt19937_64& rng, int k);
/// Random valid space over a simple spectrum, built one point at a time.
MetricSpace random_metric_space(std::mt19937_64& rng, const Spectrum& s, int n);

}  // namespace boxram
