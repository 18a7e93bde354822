#include <gtest/gtest.h>

#include <random>

#include "chainpair/errors.hpp"
#include "chainpair/reduction.hpp"
#include "chainpair/wcps.hpp"
#include "test_support.hpp"

using namespace chainpair;

namespace {

// Keeps the heavy A vertex of the stages in `first`, the heavy B vertex otherwise.
Solution choice(std::size_t stages, const std::vector<std::size_t>& first) {
  Solution sol;
  for (std::size_t k = 0; k < stages; ++k) {
    const bool heavy_a = std::find(first.begin(), first.end(), k) != first.end();
    const std::size_t at = heavy_a ? 2 * k + 1 : 2 * k + 2;
    sol.a_idx.push_back(at);
    sol.b_idx.push_back(at);
  }
  return sol;
}

}  // namespace

TEST(Wcps, WeightPattern) {
  const auto inst = gen_wcps_instance(std::vector<int>{1, 2, 3});
  EXPECT_EQ(inst.weight_a, (std::vector<double>{2, 1, 3, 1, 4, 1}));
  EXPECT_EQ(inst.weight_b, (std::vector<double>{1, 2, 1, 3, 1, 4}));
  EXPECT_EQ(inst.k, 6.0);
  EXPECT_EQ(inst.a.cols(), 6);
}

TEST(Wcps, WeightOfOddAAndEvenB) {
  const auto inst = gen_wcps_instance(std::vector<int>{1, 2, 3});
  const Solution sol{{1, 3, 5}, {2, 4, 6}};
  EXPECT_EQ(weight_of(sol, inst), std::make_pair(9.0, 9.0));
  EXPECT_THROW(weight_of({{7}, {1}}, inst), std::out_of_range);
}

TEST(Wcps, UnitWeightsCountVertices) {
  const auto& g = gadget_template();
  const auto inst = unit_weights({g.a, g.b, {kGadgetDelta, kGadgetDelta, kGadgetCross}, 6});
  const Solution path{{1, 2, 4, 7, 11}, {1, 5, 8, 9, 10, 11}};
  EXPECT_EQ(weight_of(path, inst), std::make_pair(5.0, 6.0));
  EXPECT_TRUE(verify_wcps(inst, path));
}

TEST(Wcps, BalancedChoiceVerifies) {
  const auto inst = gen_wcps_instance(std::vector<int>{1, 1, 2});
  EXPECT_EQ(inst.k, 5.0);
  EXPECT_TRUE(verify_wcps(inst, choice(3, {0, 1})));
  EXPECT_FALSE(verify_wcps(inst, choice(3, {0})));  // B side weighs 6
  // Coupling a stage-1 A vertex with a stage-2 B vertex fails the cross bound.
  EXPECT_FALSE(verify_wcps(inst, {{1, 3, 6}, {1, 4, 6}}));
}

TEST(Wcps, SolveExamples) {
  for (const auto& [set, partitionable] :
       std::vector<std::pair<std::vector<int>, bool>>{{{1, 1, 2}, true}, {{1, 3}, false},
                                                      {{1, 1}, true}, {{1, 2}, false},
                                                      {{2, 2, 3, 3}, true}}) {
    const auto inst = gen_wcps_instance(set);
    const auto sol = solve_wcps(inst);
    EXPECT_EQ(sol.has_value(), partitionable);
    EXPECT_EQ(brute_force_wcps(inst).has_value(), partitionable);
    if (sol) {
      EXPECT_TRUE(verify_wcps(inst, *sol));
      const auto part = decode_weighted_partition(set, *sol);
      EXPECT_EQ(side_sum(set, part.first), side_sum(set, part.second));
    }
  }
}

TEST(Wcps, ValidateRejectsBadWeights) {
  auto inst = gen_wcps_instance(std::vector<int>{1, 2});
  EXPECT_NO_THROW(validate(inst));
  inst.weight_a.pop_back();
  EXPECT_THROW(validate(inst), std::invalid_argument);
  EXPECT_THROW(solve_wcps(inst), std::invalid_argument);
  inst.weight_a.push_back(0.0);
  EXPECT_THROW(validate(inst), std::invalid_argument);
}

TEST(Wcps, BruteForceGuard) {
  std::mt19937 rng(41);
  const Chain3d a = support::random_walk(rng, 15);
  const auto inst = unit_weights({a, a, {1, 1, 1}, 15});
  EXPECT_THROW(brute_force_wcps(inst), GuardError);
}

TEST(Wcps, UnitWeightsAgreeWithCountSolver) {
  std::mt19937 rng(42);
  for (int t = 0; t < 150; ++t) {
    const auto cps = support::random_instance(rng, 9);
    EXPECT_EQ(solve_wcps(unit_weights(cps)).has_value(), solve(cps).has_value());
  }
}

TEST(Wcps, MatchesBruteForce) {
  std::mt19937 rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto inst = support::random_weighted(rng, 7);
    const auto sol = solve_wcps(inst);
    const auto oracle = brute_force_wcps(inst);
    EXPECT_EQ(sol.has_value(), oracle.has_value());
    if (sol) EXPECT_TRUE(verify_wcps(inst, *sol));
    if (oracle) EXPECT_TRUE(verify_wcps(inst, *oracle));
  }
}

TEST(Wcps, WeightFrontIsNonDominatedAndAchievable) {
  std::mt19937 rng(44);
  for (int t = 0; t < 100; ++t) {
    const auto inst = support::random_weighted(rng, 7);
    const auto front = weight_front(inst);
    for (const auto& p : front) {
      for (const auto& q : front) EXPECT_FALSE(p.dominates(q));
      WcpsInstance at = inst;
      at.k = std::max(p.a, p.b);
      EXPECT_TRUE(brute_force_wcps(at).has_value());
    }
  }
}
