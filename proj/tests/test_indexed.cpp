#include <gtest/gtest.h>

#include <random>

#include "boxram/error.hpp"
#include "boxram/indexed.hpp"
#include "brute.hpp"

using namespace boxram;

namespace {

IndexedStructure random_indexed(std::mt19937_64& rng, int index_size, int max_label) {
  std::uniform_int_distribution<int> sz(1, max_label);
  IndexedStructure x;
  const auto& idx = graphs_up_to_iso(index_size);
  x.index = idx[std::uniform_int_distribution<std::size_t>(0, idx.size() - 1)(rng)];
  for (int j = 0; j < index_size; ++j) {
    const auto& ls = graphs_up_to_iso(sz(rng));
    x.labels.push_back(ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]);
  }
  return x;
}

}  // namespace

TEST(Indexed, Validation) {
  IndexedStructure x{path_graph(2), {complete_graph(2)}};
  EXPECT_FALSE(validate_indexed(x).ok());
  x.labels.push_back(linear_order(1));
  EXPECT_FALSE(validate_indexed(x).ok());
  x.labels.back() = graph(1, {});
  EXPECT_TRUE(validate_indexed(x).ok());
  auto id = identity_morphism(x);
  EXPECT_TRUE(validate_morphism(id).ok());
  id.label_maps[0] = {1, 1};
  EXPECT_FALSE(validate_morphism(id).ok());
}

TEST(Indexed, CategoryLawsOnRandomTriples) {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 25) {
    const auto a = random_indexed(rng, 1 + rng() % 2, 2);
    const auto b = random_indexed(rng, 2 + rng() % 2, 3);
    const auto c = random_indexed(rng, 3, 3);
    const auto f_all = enumerate_indexed_embeddings(a, b);
    const auto g_all = enumerate_indexed_embeddings(b, c);
    if (f_all.empty() || g_all.empty()) continue;
    const auto& f = f_all[rng() % f_all.size()];
    const auto& g = g_all[rng() % g_all.size()];
    const auto h = identity_morphism(c);
    const auto gf = compose(g, f);
    EXPECT_TRUE(validate_morphism(gf).ok());
    EXPECT_EQ(compose(h, gf), compose(compose(h, g), f));
    EXPECT_EQ(compose(identity_morphism(b), f), f);
    EXPECT_EQ(compose(f, identity_morphism(a)), f);
    EXPECT_THROW(compose(f, g), Error);
    ++done;
  }
}

TEST(Indexed, AutOrderMatchesFlattenedAutomorphisms) {
  const std::vector<std::pair<FinStructure, FinStructure>> cases{
      {empty_graph(2), complete_graph(2)}, {complete_graph(2), complete_graph(2)}, {path_graph(3), graph(1, {})},
      {linear_order(2), linear_order(2)},  {complete_graph(3), empty_graph(2)},   {empty_graph(4), complete_graph(2)}};
  for (const auto& [idx, lab] : cases) {
    const auto x = constant_labeling(idx, lab);
    EXPECT_TRUE(is_constant(x));
    const auto order = indexed_aut_order(x);
    EXPECT_EQ(order, count_indexed_automorphisms(x));
    EXPECT_EQ(order, brute::automorphism_count(flatten(x)));
  }
  EXPECT_EQ(indexed_aut_order(constant_labeling(empty_graph(2), complete_graph(2))), 8u);
}

TEST(Indexed, CopiesAreDistinctImages) {
  const auto a = constant_labeling(graph(1, {}), complete_graph(2));
  const auto h = constant_labeling(complete_graph(2), complete_graph(3));
  const auto copies = enumerate_indexed_copies(a, h);
  EXPECT_EQ(copies.size(), 2u * 3u);
  EXPECT_TRUE(std::is_sorted(copies.begin(), copies.end()));
  EXPECT_EQ(enumerate_indexed_embeddings(a, h).size(), 2u * 6u);
}

TEST(Indexed, JointEmbeddings) {
  const auto u = jep_disjoint_union({complete_graph(2), graph(1, {})});
  EXPECT_EQ(u.joint.size(), 3);
  for (std::size_t i = 0; i < u.maps.size(); ++i)
    EXPECT_TRUE(is_embedding(u.maps[i], i == 0 ? complete_graph(2) : graph(1, {}), u.joint));
  const auto c = jep_concatenation({linear_order(2), linear_order(1)});
  EXPECT_EQ(c.joint, linear_order(3));
  EXPECT_THROW(jep_by_name("bogus", graph_signature()), Error);
}

TEST(Indexed, CofinalEmbeddingIntoConstantLabels) {
  IndexedStructure x{path_graph(3), {complete_graph(2), graph(1, {}), complete_graph(2)}};
  const auto m = cofinal_embed(x, jep_by_name("auto", graph_signature()));
  EXPECT_TRUE(validate_morphism(m).ok());
  EXPECT_TRUE(is_constant(m.target));
  EXPECT_EQ(m.target.index, x.index);
  EXPECT_EQ(m.index_map, (std::vector<int>{0, 1, 2}));
  IndexedStructure same{path_graph(2), {complete_graph(2), complete_graph(2)}};
  EXPECT_EQ(cofinal_embed(same, jep_by_name("auto", graph_signature())).target, same);
}

TEST(Indexed, FlattenLayout) {
  const auto f = flatten(constant_labeling(linear_order(2), complete_graph(2)));
  EXPECT_EQ(f.size(), 4);
  const auto sim = f.signature().index_of("~");
  EXPECT_TRUE(f.holds(sim, 0, 1));
  EXPECT_FALSE(f.holds(sim, 1, 2));
  const auto lt = f.signature().index_of("I.<");
  EXPECT_TRUE(f.holds(lt, 1, 2));
  EXPECT_FALSE(f.holds(lt, 2, 1));
}
