#include <gtest/gtest.h>

#include <random>

#include "boxram/boxdeg.hpp"
#include "boxram/error.hpp"
#include "brute.hpp"

using namespace boxram;

namespace {

FinStructure point() { return graph(1, {}); }
FinStructure edge() { return complete_graph(2); }
FinStructure non_edge() { return empty_graph(2); }

FinStructure random_graph(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (coin(rng)) e.emplace_back(x, y);
  return graph(n, e);
}

}  // namespace

TEST(BoxDeg, SurjectionsMatchBruteForce) {
  for (int d = 1; d <= 6; ++d)
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(surjection_count(d, k), BigInt(brute::surjections(d, k))) << d << k;
  EXPECT_EQ(surjection_count(3, 2), 6);
}

TEST(BoxDeg, OrderedBellNumbers) {
  const std::vector<int> expected{1, 3, 13, 75, 541, 4683};
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(omega_box_degree(d), expected[d - 1]);
  EXPECT_EQ(canonical_relation_count(2), 8);
  EXPECT_EQ(canonical_relation_count(3), BigInt(1) << 13);
}

TEST(BoxDeg, ClassCountMatchesBruteForce) {
  std::mt19937_64 rng(21);
  const std::vector<std::vector<FinStructure>> pattern_sets{
      {point()}, {point(), point()}, {edge()}, {point(), edge()}, {non_edge(), point()}, {edge(), non_edge()},
      {point(), point(), point()}};
  for (int trial = 0; trial < 12; ++trial) {
    const auto amb = random_graph(rng, 4 + trial % 2);
    for (const auto& pats : pattern_sets) {
      bool all_present = true;
      for (const auto& p : pats) all_present = all_present && count_embeddings(p, amb) > 0;
      if (!all_present) {
        EXPECT_THROW(SimClassifier(pats, amb), Error);
        continue;
      }
      SimClassifier cls(pats, amb);
      EXPECT_EQ(cls.classes().size(), brute::class_count(pats, amb));
      std::uint64_t members = 0;
      for (const auto& c : cls.classes()) members += c.member_count;
      EXPECT_EQ(members, cls.tuple_count());
    }
  }
}

TEST(BoxDeg, SimEquivalenceAgreesWithKeysAndBruteForce) {
  std::mt19937_64 rng(4);
  const auto amb = random_graph(rng, 5);
  const std::vector<FinStructure> pats{point(), point(), point()};
  SimClassifier cls(pats, amb);
  std::uniform_int_distribution<std::uint64_t> pick(0, cls.tuple_count() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto x = cls.tuple_at(pick(rng)), y = cls.tuple_at(pick(rng));
    brute::Tuple bx, by;
    for (const auto& c : x.components) bx.push_back(c.vertices);
    for (const auto& c : y.components) by.push_back(c.vertices);
    const bool ref = brute::tuple_equivalent(amb, bx, amb, by);
    EXPECT_EQ(sim_equivalent(x, y), ref);
    EXPECT_EQ(sim_key(x) == sim_key(y), ref);
  }
}

TEST(BoxDeg, KeysCompareAcrossAmbients) {
  const auto small = path_graph(3), big = path_graph(5);
  SimClassifier cls({point(), point()}, small);
  SimClassifier other({point(), point()}, big);
  for (std::uint64_t f = 0; f < other.tuple_count(); ++f) EXPECT_TRUE(cls.classify(other.tuple_at(f)).has_value());
}

TEST(BoxDeg, OrbitSizesOfPointPairs) {
  SimClassifier chain({linear_order(1), linear_order(1)}, linear_order(2));
  ASSERT_EQ(chain.classes().size(), 3u);
  for (const auto& c : chain.classes()) EXPECT_EQ(c.orbit_size, 1u);

  SimClassifier clique({point(), point()}, edge());
  ASSERT_EQ(clique.classes().size(), 2u);
  EXPECT_EQ(clique.classes()[0].orbit_size, 1u);
  EXPECT_EQ(clique.classes()[1].orbit_size, 2u);
  EXPECT_EQ(clique.classes()[1].trace_automorphisms, 2u);
}

TEST(BoxDeg, FibersHaveOrbitSizeOnSmallGraphs) {
  for (const auto& amb : {cycle_graph(5), path_graph(4), complete_graph(4)}) {
    SimClassifier cls({point(), edge()}, amb);
    for (const auto& f : fiber_analysis(cls)) {
      EXPECT_TRUE(f.exact());
      EXPECT_TRUE(f.persistent());
      EXPECT_LE(f.orbit_size, f.trace_automorphisms);
    }
  }
}

TEST(BoxDeg, BoxDegreeRequiresTableEntries) {
  DegreeTable table;
  EXPECT_THROW(box_degree({point(), point()}, edge(), table), Error);
  const auto r = box_degree({point(), point()}, edge(), table, true);
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(r.class_count, 2u);
  for (const auto& t : r.terms) EXPECT_EQ(t.provenance, Provenance::AssumedOne);

  table.set(point(), 1);
  table.set(edge(), 2);
  const auto w = box_degree({point(), point()}, edge(), table);
  EXPECT_EQ(w.value, 1u + 2u * 2u);
  EXPECT_EQ(w.aut_weighted_value, 1u + 2u * 2u);
  EXPECT_THROW(table.set(edge(), 0), Error);
}

TEST(BoxDeg, DegreeTableIsKeyedByIsomorphism) {
  DegreeTable table;
  table.set(graph(3, {{0, 1}}), 4);
  const auto hit = table.lookup(graph(3, {{1, 2}}));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->degree, 4u);
  EXPECT_FALSE(table.lookup(graph(3, {})).has_value());
  EXPECT_FALSE(table.lookup(linear_order(3)).has_value());
}
