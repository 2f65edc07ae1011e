#include <gtest/gtest.h>

#include <random>

#include "boxram/error.hpp"
#include "boxram/metric.hpp"

using namespace boxram;

namespace {

Spectrum spec(std::initializer_list<int> v) {
  std::vector<Rational> d;
  for (int x : v) d.emplace_back(x);
  return Spectrum(d);
}

MetricSpace space(std::vector<std::vector<int>> m) {
  MetricSpace x;
  x.n = static_cast<int>(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    x.d.push_back(r);
  }
  return x;
}

// a, b at distance 1; c, d at distance 2; cross distances 5.
MetricSpace four_points() { return space({{0, 1, 5, 5}, {1, 0, 5, 5}, {5, 5, 0, 2}, {5, 5, 2, 0}}); }

}  // namespace

TEST(Metric, Rationals) {
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(format_rational(Rational(10, 4)), "5/2");
  EXPECT_EQ(format_rational(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(spec({1, 1}), Error);
  EXPECT_THROW(spec({0, 1}), Error);
}

TEST(Metric, BlocksAndSimplicity) {
  const auto blocks = block_decompose(spec({1, 2, 5, 11, 12}));
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0], (Block{1, 2}));
  EXPECT_EQ(blocks[1], (Block{5}));
  EXPECT_EQ(blocks[2], (Block{11, 12}));
  EXPECT_TRUE(is_simple(spec({1, 2, 5, 11, 12})));
  EXPECT_EQ(block_decompose(spec({1, 2, 3, 4})).size(), 2u);
  EXPECT_FALSE(is_simple(spec({1, 2, 3, 4})));
  EXPECT_TRUE(is_simple(spec({3, 1})));
  EXPECT_FALSE(is_simple(spec({1, 2, 4})));
  EXPECT_TRUE(is_independent({1, 2}, {5}));
  EXPECT_FALSE(is_independent({1, 2}, {3}));
  EXPECT_THROW(is_independent({3}, {3}), Error);
}

TEST(Metric, SimplicityMatchesDefinitionOnRandomSpectra) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(1, 40), den(1, 4), len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> d;
    const int n = len(rng);
    while (static_cast<int>(d.size()) < n) {
      Rational r(num(rng), den(rng));
      if (std::find(d.begin(), d.end(), r) == d.end()) d.push_back(r);
    }
    const Spectrum s(d);
    const auto blocks = block_decompose(s);
    for (const auto& b : blocks)
      for (const auto& a : b) EXPECT_LE(a, 2 * b.front());
    bool simple = true;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        simple = simple && 2 * blocks[i].back() < blocks[j].front();
    EXPECT_EQ(is_simple(s), simple);
  }
}

TEST(Metric, Validation) {
  const auto s = spec({1, 2, 5, 11});
  EXPECT_TRUE(validate_metric(four_points(), s).ok());
  EXPECT_FALSE(validate_metric(space({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), s).ok());
  EXPECT_FALSE(validate_metric(space({{0, 1}, {2, 0}}), s).ok());
  EXPECT_FALSE(validate_metric(space({{0, 3}, {3, 0}}), s).ok());
  EXPECT_FALSE(validate_metric(space({{1, 1}, {1, 0}}), s).ok());
}

TEST(Metric, Partition) {
  const auto s = spec({1, 2, 5, 11});
  EXPECT_EQ(sim_partition(four_points(), s), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(sim_partition(space({{0, 5, 11}, {5, 0, 11}, {11, 11, 0}}), s).size(), 3u);
  EXPECT_EQ(sim_partition(space({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), s).size(), 1u);
}

TEST(Metric, Admissibility) {
  EXPECT_EQ(admissible_k(spec({1, 2, 5, 11})), 3);
  EXPECT_EQ(admissible_k(spec({1, 3})), 2);
  EXPECT_THROW(admissible_k(spec({1, 2})), Error);
  EXPECT_THROW(admissible_k(spec({1, 2, 5, 11, 12})), Error);
  EXPECT_THROW(admissible_k(spec({1, 2, 4})), Error);
}

TEST(Metric, EncodeFourPoints) {
  const auto s = spec({1, 2, 5, 11});
  const auto e = encode_F(four_points(), s);
  EXPECT_EQ(e.structure.index.size(), 2);
  EXPECT_TRUE(e.structure.index.holds(0, 0, 1));  // C0: distance 5
  ASSERT_EQ(e.structure.labels.size(), 2u);
  EXPECT_TRUE(e.structure.labels[0].holds(0, 0, 1));  // C0: distance 1
  EXPECT_TRUE(e.structure.labels[1].holds(1, 0, 1));  // C1: distance 2
  EXPECT_TRUE(is_isometric_embedding({0, 1, 2, 3}, decode_F(e.structure, s), four_points()));
}

TEST(Metric, DecodeRejectsTriangleViolations) {
  const auto s = spec({1, 2, 5, 11});
  const auto sig = colored_signature(2);
  IndexedStructure y;
  y.index = FinStructure(sig, 3, {{{0, 1}, {1, 0}, {0, 2}, {2, 0}}, {{1, 2}, {2, 1}}});
  for (int i = 0; i < 3; ++i) y.labels.push_back(FinStructure(sig, 1, {{}, {}}));
  EXPECT_THROW(decode_F(y, s), Error);
}

TEST(Metric, RoundTripOnRandomAdmissibleSpaces) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_admissible_spectrum(rng, 2 + trial % 3);
    const auto x = random_metric_space(rng, s, 1 + trial % 7);
    ASSERT_TRUE(validate_metric(x, s).ok());
    const auto e = encode_F(x, s);
    const auto back = decode_F(e.structure, s);
    std::vector<int> where(x.n);
    int pos = 0;
    for (const auto& c : e.classes)
      for (int v : c) where[pos++] = v;
    EXPECT_TRUE(is_isometric_embedding(where, back, x));
    EXPECT_TRUE(are_isometric(back, x, s));
    const auto again = encode_F(back, s);
    EXPECT_EQ(again.structure.index.size(), e.structure.index.size());
  }
}

TEST(Metric, IsometricEmbeddingsLift) {
  const auto s = spec({1, 2, 5, 11});
  const auto y = four_points();
  MetricSpace x = space({{0, 5}, {5, 0}});
  const auto ex = encode_F(x, s), ey = encode_F(y, s);
  const std::vector<int> f{1, 3};
  ASSERT_TRUE(is_isometric_embedding(f, x, y));
  const auto m = lift_embedding(f, ex, ey);
  EXPECT_TRUE(validate_morphism(m).ok());
  EXPECT_EQ(m.index_map, (std::vector<int>{0, 1}));
}
