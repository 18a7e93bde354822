#include <gtest/gtest.h>

#include <numeric>

#include "chainpair/errors.hpp"
#include "chainpair/reduction.hpp"
#include "test_support.hpp"

using namespace chainpair;

TEST(Reduction, TranslateMovesEveryVertex) {
  const Chain3d c = make_chain({{0, 0, 0}, {1, 2, 3}});
  EXPECT_EQ(translate(c, 0, 0), c);
  const Chain3d t = translate(c, 2, 3);
  EXPECT_NEAR(t(0, 1), 1 + 3.4, 1e-12);
  EXPECT_EQ(t(1, 1), 2.0);
  EXPECT_NEAR(t(2, 1), 33.0, 1e-12);
}

TEST(Reduction, UnitBlockIsTheShiftedGadget) {
  const auto [x, y] = gen_block(1, 0);
  EXPECT_TRUE(x.isApprox(translate(gadget_template().a, 1, 0)));
  EXPECT_TRUE(y.isApprox(translate(gadget_template().b, 1, 0)));
}

TEST(Reduction, BlockLayout) {
  EXPECT_EQ(gen_block(5, 0).first.cols(), 43);
  const auto [x, y] = gen_block(3, 2);
  ASSERT_EQ(x.cols(), 27);
  ASSERT_EQ(y.cols(), 27);
  const auto& a = gadget_template().a;
  EXPECT_TRUE(x.col(0).isApprox(translate(a, 1, 2).col(0)));
  for (int u = 1; u <= 3; ++u) {
    EXPECT_TRUE(x.middleCols(1 + 8 * (u - 1), 8).isApprox(translate(a, u, 2).middleCols(1, 8)));
  }
  EXPECT_TRUE(x.rightCols(2).isApprox(translate(a, 3, 2).rightCols(2)));
  EXPECT_THROW(gen_block(0, 0), std::invalid_argument);
}

TEST(Reduction, InstanceLengthsAndBudget) {
  const auto one = gen_instance(std::vector<int>{1});
  EXPECT_EQ(one.instance.a.cols(), 11);
  const auto three = gen_instance(std::vector<int>{3});
  EXPECT_EQ(three.instance.a.cols(), 27);
  EXPECT_EQ(three.instance.k, 12.5);
  EXPECT_EQ(three.instance.deltas, (Deltas{1.1, 1.1, 0.9}));

  const std::vector<int> set{1, 2};
  const auto two = gen_instance(set);
  EXPECT_EQ(two.instance.a.cols(), 30);
  EXPECT_EQ(two.instance.b.cols(), 30);
  EXPECT_NEAR(two.instance.a(2, 0), gadget_template().a(2, 0), 1e-12);
  EXPECT_NEAR(two.instance.a(2, 11), gadget_template().a(2, 0) + 10.0, 1e-12);
  ASSERT_EQ(two.blocks.size(), 2u);
  EXPECT_EQ(two.blocks[1].a, (IndexInterval{12, 30}));
  EXPECT_EQ(two.blocks[1].units_a.size(), 2u);
  EXPECT_EQ(two.blocks[1].units_a[1], (IndexInterval{21, 28}));
  EXPECT_THROW(gen_instance(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(gen_instance(std::vector<int>{1, -1}), std::invalid_argument);
}

TEST(Reduction, BlockMapTilesTheChains) {
  const std::vector<int> set{2, 1, 3, 1};
  const auto gen = gen_instance(set);
  std::size_t next = 1;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto& b = gen.blocks[k];
    EXPECT_EQ(b.element, set[k]);
    EXPECT_EQ(b.a.lo, next);
    EXPECT_EQ(b.a.size(), 8u * static_cast<std::size_t>(set[k]) + 3);
    EXPECT_EQ(b.b, b.a);
    for (const auto& u : b.units_a) {
      EXPECT_TRUE(b.a.contains(u));
      EXPECT_EQ(u.size(), 8u);
    }
    next = b.a.hi + 1;
  }
  EXPECT_EQ(next - 1, static_cast<std::size_t>(gen.instance.a.cols()));
}

TEST(Reduction, JunctionsAreIsolated) {
  const auto gen = gen_instance(std::vector<int>{1, 2, 1});
  const auto& a = gen.instance.a;
  for (std::size_t k = 1; k < gen.blocks.size(); ++k) {
    const std::size_t first = gen.blocks[k].a.lo;
    EXPECT_GT(dist(vertex(a, first), vertex(a, first - 1)), 9.0);
  }
}

TEST(Reduction, PartitionBudget) {
  EXPECT_EQ(partition_budget(std::vector<int>{3}), 12.5);
  EXPECT_EQ(partition_budget(std::vector<int>{1, 1}), 4 + 6 + 1);
}

TEST(Reduction, DecodeThreeCopyPaths) {
  const std::vector<int> set{3};
  const auto gen = gen_instance(set);
  const auto sols = pareto_solutions(gen.instance.a, gen.instance.b, gen.instance.deltas);
  ASSERT_EQ(sols.size(), 2u);
  for (const auto& s : sols) {
    const auto part = decode_partition(gen, s.solution);
    if (s.counts.a > s.counts.b) {
      EXPECT_EQ(part.first, (std::vector<std::size_t>{0}));
      EXPECT_TRUE(part.second.empty());
    } else {
      EXPECT_EQ(part.second, (std::vector<std::size_t>{0}));
      EXPECT_TRUE(part.first.empty());
    }
  }
}

TEST(Reduction, DecodeRejectsNonCanonicalSolutions) {
  const auto gen = gen_instance(std::vector<int>{1});
  std::vector<std::size_t> all(11);
  std::iota(all.begin(), all.end(), 1);
  EXPECT_THROW(decode_partition(gen, {all, all}), DecodeError);
}

TEST(Reduction, BalancedPairDecodes) {
  const std::vector<int> set{1, 1};
  const auto gen = gen_instance(set);
  const auto sol = solve(gen.instance);
  ASSERT_TRUE(sol.has_value());
  const auto part = decode_partition(gen, *sol);
  EXPECT_EQ(part.first.size(), 1u);
  EXPECT_EQ(part.second.size(), 1u);
  EXPECT_EQ(side_sum(set, part.first), side_sum(set, part.second));
}

TEST(Reduction, SolvePartitionExamples) {
  const std::vector<int> s123{1, 2, 3};
  const auto p = solve_partition(s123);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(side_sum(s123, p->first), 3);
  EXPECT_EQ(side_sum(s123, p->second), 3);
  EXPECT_FALSE(solve_partition(std::vector<int>{1, 3}).has_value());
  EXPECT_FALSE(solve_partition(std::vector<int>{2}).has_value());
}

TEST(Reduction, BruteForcePartition) {
  const std::vector<int> set{3, 1, 1, 2, 2, 1};
  const auto p = brute_force_partition(set);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(side_sum(set, p->first), 5);
  EXPECT_EQ(p->first.size() + p->second.size(), set.size());
  EXPECT_FALSE(brute_force_partition(std::vector<int>{1, 2}).has_value());
  EXPECT_THROW(brute_force_partition(std::vector<int>(21, 1)), GuardError);
}

TEST(Reduction, WeightedDecodeFollowsHeavyA) {
  const std::vector<int> set{1, 2, 3};
  const auto part = decode_weighted_partition(set, {{1, 4, 5}, {2, 3, 6}});
  EXPECT_EQ(part.first, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(part.second, (std::vector<std::size_t>{1}));
}

TEST(Reduction, UncorrectedA9IsKept) {
  EXPECT_EQ(uncorrected_a9(), Point3d(2.24, 0.46, 1.85));
  EXPECT_EQ(vertex(gadget_template().a, 9), Point3d(2.24, 0.46, 0.85));
}
