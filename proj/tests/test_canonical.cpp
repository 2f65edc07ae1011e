#include <gtest/gtest.h>

#include <memory>

#include "boxram/canonical.hpp"
#include "boxram/error.hpp"
#include "brute.hpp"

using namespace boxram;

namespace {

// Class of the ordered point pair (x, y) in a chain: 0 equal, 1 increasing, 2 decreasing.
int chain_type(int x, int y) { return x == y ? 0 : (x < y ? 1 : 2); }

}  // namespace

TEST(Canonical, EightBinaryRelationsOnChainPoints) {
  const auto specs = enumerate_canonical_relations(2, linear_order(2));
  ASSERT_EQ(specs.size(), 8u);
  EXPECT_EQ(specs.front().classes.size(), 0u);
  EXPECT_EQ(specs.back().classes.size(), 3u);
  for (std::size_t i = 1; i < specs.size(); ++i)
    EXPECT_LE(specs[i - 1].classes.size(), specs[i].classes.size());
}

TEST(Canonical, RelationsAreDeterminedByOrderType) {
  const auto specs = enumerate_canonical_relations(2, linear_order(2));
  const auto ctx = specs.front().context;
  // Map context classes to order types through their representatives.
  std::vector<int> type_of(ctx->classes().size());
  for (std::size_t c = 0; c < ctx->classes().size(); ++c) {
    const auto& rep = ctx->classes()[c].representative.components;
    type_of[c] = chain_type(rep[0].vertices[0], rep[1].vertices[0]);
  }
  const auto big = linear_order(5);
  SimClassifier pairs({linear_order(1), linear_order(1)}, big);
  for (const auto& s : specs)
    for (std::uint64_t f = 0; f < pairs.tuple_count(); ++f) {
      const auto t = pairs.tuple_at(f);
      const int ty = chain_type(t.components[0].vertices[0], t.components[1].vertices[0]);
      bool expected = false;
      for (int c : s.classes) expected = expected || type_of[c] == ty;
      EXPECT_EQ(s.holds(t), expected);
      EXPECT_EQ(relation_from_classes(s)(t), expected);
    }
}

TEST(Canonical, OnlyEqualityAndTrivialAreEquivalencesOnChains) {
  const auto specs = enumerate_canonical_relations(2, linear_order(3));
  const auto kept = filter_equivalences(specs, linear_order(4));
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].classes.size(), 1u);
  EXPECT_EQ(kept[0].context->classes()[kept[0].classes[0]].trace_pattern.size(), 1);
  EXPECT_EQ(kept[1].classes.size(), 3u);
}

TEST(Canonical, FilterMatchesDirectCheckOnGraphs) {
  const auto ctx_amb = graph(4, {{0, 1}, {1, 2}});
  const auto specs = enumerate_canonical_relations(2, ctx_amb);
  const auto test = graph(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto kept = filter_equivalences(specs, test);
  const auto ctx = specs.front().context;
  // Direct check: relation on points of the test graph via brute equivalence to class representatives.
  std::vector<std::vector<char>> in_class(ctx->classes().size(), std::vector<char>(25));
  for (std::size_t c = 0; c < ctx->classes().size(); ++c) {
    brute::Tuple rep;
    for (const auto& comp : ctx->classes()[c].representative.components) rep.push_back(comp.vertices);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) in_class[c][x * 5 + y] = brute::tuple_equivalent(ctx_amb, rep, test, {{x}, {y}});
  }
  std::size_t expected = 0;
  for (const auto& s : specs) {
    auto r = [&](int x, int y) {
      for (int c : s.classes)
        if (in_class[c][x * 5 + y]) return true;
      return false;
    };
    bool eq = true;
    for (int x = 0; x < 5; ++x) eq = eq && r(x, x);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        eq = eq && r(x, y) == r(y, x);
        for (int z = 0; z < 5; ++z) eq = eq && (!(r(x, y) && r(y, z)) || r(x, z));
      }
    if (eq) ++expected;
  }
  EXPECT_EQ(kept.size(), expected);
}

TEST(Canonical, FilterRejectsThinTestAmbients) {
  const auto specs = enumerate_canonical_relations(2, linear_order(3));
  EXPECT_THROW(filter_equivalences(specs, linear_order(2)), Error);
}

TEST(Canonical, EquivRelationValidation) {
  const auto amb = linear_order(3), pt = linear_order(1);
  EXPECT_NO_THROW(EquivRelation(amb, pt, {{0, 2}, {1}}));
  EXPECT_THROW(EquivRelation(amb, pt, {{0, 2}}), Error);
  EXPECT_THROW(EquivRelation(amb, pt, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(EquivRelation(amb, pt, {{0, 1, 2}, {}}), Error);
  EXPECT_THROW(EquivRelation(amb, pt, {{0, 1, 3}, {2}}), Error);
  const auto e = EquivRelation::from_labels(amb, pt, {5, 7, 5});
  EXPECT_EQ(e.blocks, (std::vector<std::vector<int>>{{0, 2}, {1}}));
}

TEST(Canonical, CoverSearchFindsFirstWitness) {
  const auto amb = linear_order(5), pt = linear_order(1);
  const auto basis = enumerate_canonical_relations(2, linear_order(2));
  const auto e = EquivRelation::from_labels(amb, pt, {0, 0, 1, 1, 2});
  const auto res = basis_cover_search(e, basis, 3);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(res.witness->subambient, (std::vector<int>{0, 2, 4}));
  const auto& rel = basis[res.witness->basis_index];
  ASSERT_EQ(rel.classes.size(), 1u);
  EXPECT_EQ(rel.context->classes()[rel.classes[0]].trace_pattern.size(), 1);
  EXPECT_EQ(res.subambients_examined, 5u);
  EXPECT_THROW(basis_cover_search(e, basis, 6), Error);
}
