#include "boxram/canonical.hpp"

#include <algorithm>
#include <map>

#include "boxram/combinatorics.hpp"
#include "boxram/error.hpp"

namespace boxram {

bool RelationSpec::contains(int class_index) const {
  return std::binary_search(classes.begin(), classes.end(), class_index);
}

bool RelationSpec::holds_key(const std::vector<int>& key) const {
  auto c = context->classify_key(key);
  if (!c) throw Error("tuple is not classified by the relation's context");
  return contains(*c);
}

bool RelationSpec::holds(const CopyTuple& t) const {
  if (t.components.size() != context->dimension()) throw Error("tuple has the wrong length for the relation");
  return holds_key(sim_key(t));
}

RelationSpec make_relation(std::shared_ptr<const SimClassifier> context, std::vector<int> classes) {
  if (!context) throw Error("relation without context");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int c : classes)
    if (c < 0 || c >= static_cast<int>(context->classes().size()))
      throw Error("class index " + std::to_string(c) + " out of range");
  return RelationSpec{std::move(context), std::move(classes)};
}

TuplePredicate relation_from_classes(const RelationSpec& spec) {
  return [spec](const CopyTuple& t) { return spec.holds(t); };
}

FinStructure point_pattern(const FinStructure& ambient) {
  return FinStructure(ambient.signature(), 1, std::vector<std::vector<Tuple>>(ambient.signature().size()));
}

std::vector<RelationSpec> enumerate_canonical_relations(std::shared_ptr<const SimClassifier> context) {
  const int m = static_cast<int>(context->classes().size());
  if (m > 20) throw Error("too many classes to enumerate all unions");
  std::vector<RelationSpec> out;
  for (int k = 0; k <= m; ++k)
    for_each_combination(m, k, [&](const std::vector<int>& subset) {
      out.push_back(RelationSpec{context, subset});
      return true;
    });
  return out;
}

std::vector<RelationSpec> enumerate_canonical_relations(int d, const FinStructure& ambient) {
  if (d < 1) throw Error("d must be positive");
  std::vector<FinStructure> patterns(d, point_pattern(ambient));
  return enumerate_canonical_relations(std::make_shared<const SimClassifier>(patterns, ambient));
}

std::vector<RelationSpec> filter_equivalences(const std::vector<RelationSpec>& specs,
                                              const FinStructure& test_ambient) {
  if (specs.empty()) return {};
  const auto ctx = specs.front().context;
  for (const auto& s : specs)
    if (s.context != ctx) throw Error("filter_equivalences: specs must share one context");
  if (ctx->dimension() != 2 || !are_isomorphic(ctx->patterns()[0], ctx->patterns()[1]))
    throw Error("filter_equivalences: specs must be binary relations on copies of one pattern");
  const auto& a = ctx->patterns()[0];

  // Every class of triples in the context ambient must occur in the test ambient.
  const std::vector<FinStructure> triple(3, a);
  SimClassifier ctx3(triple, ctx->ambient()), test3(triple, test_ambient);
  for (const auto& c : ctx3.classes())
    if (!test3.classify_key(c.key))
      throw Error("test ambient does not realise every class of triples (missing a trace of size " +
                  std::to_string(c.trace_pattern.size()) + ")");

  SimClassifier pairs({a, a}, test_ambient);
  const std::size_t n = pairs.copies(0).size();
  // Context class of each ordered pair of test copies.
  std::vector<int> cls(n * n);
  for (std::uint64_t flat = 0; flat < pairs.tuple_count(); ++flat) {
    auto c = ctx->classify_key(pairs.classes()[pairs.class_of(flat)].key);
    if (!c) throw Error("test ambient has a pair class outside the context");
    cls[flat] = *c;
  }

  std::vector<RelationSpec> out;
  for (const auto& s : specs) {
    auto r = [&](std::size_t x, std::size_t y) { return s.contains(cls[x * n + y]); };
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = r(x, x);
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = r(x, y) == r(y, x);
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (r(x, y))
          for (std::size_t z = 0; z < n && ok; ++z) ok = !r(y, z) || r(x, z);
    if (ok) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------

EquivRelation::EquivRelation(FinStructure amb, FinStructure pat, std::vector<std::vector<int>> bl)
    : ambient(std::move(amb)), pattern(std::move(pat)), blocks(std::move(bl)) {
  carrier = copy_vertex_sets(pattern, ambient);
  label_.assign(carrier.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("equivalence relation has an empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= static_cast<int>(carrier.size()))
        throw Error("copy index " + std::to_string(x) + " out of range");
      if (label_[x] != -1) throw Error("copy " + std::to_string(x) + " lies in two blocks");
      label_[x] = static_cast<int>(b);
    }
  }
  for (std::size_t x = 0; x < carrier.size(); ++x)
    if (label_[x] == -1) throw Error("copy " + std::to_string(x) + " lies in no block");
}

EquivRelation EquivRelation::from_labels(FinStructure ambient, FinStructure pattern,
                                         const std::vector<int>& labels) {
  std::vector<std::vector<int>> blocks;
  std::map<int, std::size_t> index;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = index.emplace(labels[x], blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(static_cast<int>(x));
  }
  return EquivRelation(std::move(ambient), std::move(pattern), std::move(blocks));
}

CoverResult basis_cover_search(const EquivRelation& e, const std::vector<RelationSpec>& basis,
                               int target_size, const std::optional<FinStructure>& shape) {
  if (target_size < 1) throw Error("target size must be positive");
  for (const auto& b : basis) {
    if (b.context->dimension() != 2) throw Error("basis members must be binary relations");
    require_same_signature(b.context->ambient(), e.ambient);
  }
  if (shape && shape->size() != target_size) throw Error("shape size differs from the target size");

  // Class key of every ordered pair of carrier copies, resolved per basis context.
  SimClassifier pairs({e.pattern, e.pattern}, e.ambient);
  const std::size_t n = e.carrier.size();
  std::vector<std::vector<char>> rel(basis.size(), std::vector<char>(n * n));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::uint64_t flat = 0; flat < pairs.tuple_count(); ++flat)
      rel[b][flat] = basis[b].holds_key(pairs.classes()[pairs.class_of(flat)].key);

  CoverResult res;
  bool any = false;
  const auto& lab = e.labels();
  for_each_combination(e.ambient.size(), target_size, [&](const std::vector<int>& sub) {
    if (shape && !are_isomorphic(induced(e.ambient, sub), *shape)) return true;
    any = true;
    ++res.subambients_examined;
    std::vector<std::size_t> inside;
    for (std::size_t x = 0; x < n; ++x)
      if (std::includes(sub.begin(), sub.end(), e.carrier[x].begin(), e.carrier[x].end())) inside.push_back(x);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      bool agree = true;
      for (std::size_t i = 0; i < inside.size() && agree; ++i)
        for (std::size_t j = 0; j < inside.size() && agree; ++j) {
          const auto x = inside[i], y = inside[j];
          agree = (lab[x] == lab[y]) == static_cast<bool>(rel[b][x * n + y]);
        }
      if (agree) {
        res.witness = CoverWitness{sub, b};
        return false;
      }
    }
    return true;
  });
  if (!any) throw Error("no sub-ambient of the requested size" + std::string(shape ? " and shape" : ""));
  return res;
}

}  // namespace boxram
