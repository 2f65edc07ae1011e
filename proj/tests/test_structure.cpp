#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "boxram/error.hpp"
#include "boxram/structure.hpp"
#include "brute.hpp"

using namespace boxram;

namespace {

FinStructure random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Tuple> e;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && coin(rng)) e.push_back({x, y});
  return FinStructure(graph_signature(), n, {e});
}

}  // namespace

TEST(Structure, RejectsBadTuples) {
  EXPECT_THROW(FinStructure(graph_signature(), 2, {{{0, 2}}}), Error);
  EXPECT_THROW(FinStructure(graph_signature(), 2, {{{0}}}), Error);
  EXPECT_THROW(Signature({{"E", 2}, {"E", 1}}), Error);
}

TEST(Structure, TuplesAreSortedAndDeduplicated) {
  FinStructure s(graph_signature(), 3, {{{2, 1}, {0, 1}, {2, 1}}});
  EXPECT_EQ(s.tuples(0), (std::vector<Tuple>{{0, 1}, {2, 1}}));
  EXPECT_TRUE(s.holds(0, 2, 1));
  EXPECT_FALSE(s.holds(0, 1, 2));
}

TEST(Structure, EmbeddingCountsMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_digraph(rng, 1 + trial % 3, 0.4);
    const auto b = random_digraph(rng, 3 + trial % 3, 0.4);
    const auto maps = enumerate_embeddings(a, b);
    const auto ref = brute::embeddings(a, b);
    ASSERT_EQ(maps.size(), ref.size());
    for (std::size_t i = 0; i < maps.size(); ++i) EXPECT_EQ(maps[i].map, ref[i]);
    EXPECT_EQ(count_embeddings(a, b), ref.size());
    const auto cs = copy_vertex_sets(a, b);
    EXPECT_EQ(std::set<std::vector<int>>(cs.begin(), cs.end()), brute::copies(a, b));
    EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
  }
}

TEST(Structure, AutomorphismsMatchBruteForce) {
  EXPECT_EQ(automorphisms(cycle_graph(5)).size(), 10u);
  EXPECT_EQ(automorphisms(complete_graph(4)).size(), 24u);
  EXPECT_EQ(automorphisms(linear_order(4)).size(), 1u);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_digraph(rng, 5, 0.3);
    EXPECT_EQ(automorphisms(a).size(), brute::automorphism_count(a));
  }
}

TEST(Structure, CanonicalFormIsACompleteInvariant) {
  std::mt19937_64 rng(3);
  std::vector<FinStructure> pool;
  for (int trial = 0; trial < 60; ++trial) pool.push_back(random_digraph(rng, 4, 0.35));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      const bool same = canonical_form(pool[i]).code == canonical_form(pool[j]).code;
      EXPECT_EQ(same, brute::isomorphic(pool[i], pool[j]));
      EXPECT_EQ(are_isomorphic(pool[i], pool[j]), same);
    }
}

TEST(Structure, RelabelledCopiesShareTheCanonicalStructure) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_digraph(rng, 5, 0.4);
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = relabel(a, perm);
    EXPECT_EQ(canonical_structure(a), canonical_structure(b));
    const auto iso = find_isomorphism(a, b);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(brute::preserves(a, b, *iso));
  }
}

TEST(Structure, GraphCensus) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(graphs_up_to_iso(n).size(), expected[n]) << n;
  const std::vector<std::size_t> digraphs{1, 1, 3, 16, 218};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(digraphs_up_to_iso(n).size(), digraphs[n]) << n;
  EXPECT_EQ(labelled_tournaments(3).size(), 8u);
}

TEST(Structure, InducedAndDisjointUnion) {
  const auto p = path_graph(4);
  const std::vector<int> v{1, 2, 3};
  EXPECT_TRUE(are_isomorphic(induced(p, v), path_graph(3)));
  const auto u = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(u.size(), 4);
  EXPECT_TRUE(u.holds(0, 2, 3));
  EXPECT_FALSE(u.holds(0, 1, 2));
  EXPECT_THROW(disjoint_union(linear_order(2), complete_graph(2)), Error);
}
