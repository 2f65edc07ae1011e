#include <gtest/gtest.h>

#include <set>

#include "boxram/error.hpp"
#include "boxram/oracle.hpp"

using namespace boxram;

TEST(Oracle, ClassicalTriangleCase) {
  const auto k6 = exhaustive_ramsey_check({complete_graph(6), complete_graph(3), complete_graph(2), 2, 1});
  EXPECT_EQ(k6.verdict, RamseyResult::Verdict::Holds);

  const auto k5 = exhaustive_ramsey_check({complete_graph(5), complete_graph(3), complete_graph(2), 2, 1});
  ASSERT_EQ(k5.verdict, RamseyResult::Verdict::Fails);
  ASSERT_EQ(k5.counterexample.size(), 10u);
  EXPECT_EQ(k5.counterexample.front(), 0);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        std::set<int> seen;
        for (std::size_t e = 0; e < k5.a_copies.size(); ++e) {
          const auto& v = k5.a_copies[e];
          const std::set<int> tri{a, b, c};
          if (tri.count(v[0]) && tri.count(v[1])) seen.insert(k5.counterexample[e]);
        }
        EXPECT_EQ(seen.size(), 2u);
      }
}

TEST(Oracle, ReductionNeverChangesTheVerdict) {
  const std::vector<RamseyInstance> cases{
      {complete_graph(4), complete_graph(3), complete_graph(2), 2, 1},
      {complete_graph(4), complete_graph(2), graph(1, {}), 2, 1},
      {complete_graph(4), complete_graph(3), graph(1, {}), 2, 1},
      {complete_graph(3), complete_graph(2), graph(1, {}), 3, 1},
      {linear_order(4), linear_order(3), linear_order(2), 2, 1},
      {linear_order(4), linear_order(3), linear_order(2), 2, 2},
      {cycle_graph(5), path_graph(3), complete_graph(2), 2, 1},
      {linear_order(5), linear_order(2), linear_order(1), 3, 1}};
  for (const auto& c : cases) {
    const auto r = exhaustive_ramsey_check(c, kDefaultBudget, true);
    const auto u = exhaustive_ramsey_check(c, kDefaultBudget, false);
    EXPECT_EQ(r.verdict, u.verdict);
    EXPECT_LE(r.nodes, u.nodes);
  }
}

TEST(Oracle, BudgetIsAThirdVerdict) {
  const auto r = exhaustive_ramsey_check({complete_graph(6), complete_graph(3), complete_graph(2), 2, 1}, 50);
  EXPECT_EQ(r.verdict, RamseyResult::Verdict::BudgetExceeded);
  EXPECT_EQ(to_string(r.verdict), "budget-exceeded");
}

TEST(Oracle, Preconditions) {
  EXPECT_THROW(exhaustive_ramsey_check({complete_graph(3), complete_graph(4), complete_graph(2), 2, 1}), Error);
  EXPECT_THROW(exhaustive_ramsey_check({complete_graph(3), complete_graph(3), complete_graph(2), 0, 1}), Error);
  EXPECT_THROW(exhaustive_ramsey_check({linear_order(3), complete_graph(3), complete_graph(2), 2, 1}), Error);
}

TEST(Oracle, ClassColouringsOnChains) {
  const auto pt = linear_order(1);
  const auto tc = sim_class_coloring({pt, pt}, linear_order(5));
  EXPECT_EQ(tc.classifier->classes().size(), 3u);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) EXPECT_EQ(colors_attained(tc, {a, b}).size(), 3u);
  EXPECT_EQ(colors_attained(tc, {2}).size(), 1u);
}

TEST(Oracle, Persistence) {
  const auto pt = graph(1, {});
  const auto amb = path_graph(3);
  const auto r = persistence_check({pt, pt}, amb, {{0, 2}, {0, 1}, {1}});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checked, 3u);
  EXPECT_THROW(persistence_check({pt, pt}, amb, {{0, 5}}), Error);
}
