#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chainpair/cps.hpp"
#include "chainpair/errors.hpp"
#include "chainpair/freespace.hpp"
#include "chainpair/reduction.hpp"
#include "test_support.hpp"

using namespace chainpair;

namespace {

CpsInstance unit_instance(double k) {
  const auto& g = gadget_template();
  return {g.a, g.b, {kGadgetDelta, kGadgetDelta, kGadgetCross}, k};
}

bool feasible(const ParetoSet& front, double k) {
  return std::any_of(front.begin(), front.end(), [&](const ParetoPoint<int>& p) {
    return p.a <= k && p.b <= k;
  });
}

}  // namespace

TEST(Cps, IdentityIsASolution) {
  std::mt19937 rng(31);
  const Chain3d a = support::random_walk(rng, 6);
  CpsInstance inst{a, a, {0.0, 0.0, 0.0}, 6};
  EXPECT_TRUE(verify_solution(inst, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}));
  inst.k = 5;
  EXPECT_FALSE(verify_solution(inst, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}));
}

TEST(Cps, VerifyUnitGadgetPath) {
  const Solution path{{1, 2, 4, 7, 11}, {1, 5, 8, 9, 10, 11}};
  EXPECT_TRUE(verify_solution(unit_instance(6), path));
  EXPECT_FALSE(verify_solution(unit_instance(5.5), path));
  // Dropping a_2 leaves a_1 alone against b_1..b_3 and b_5.
  EXPECT_FALSE(verify_solution(unit_instance(6), {{1, 4, 7, 11}, {1, 5, 8, 9, 10, 11}}));
}

TEST(Cps, VerifyViolatedBounds) {
  auto inst = unit_instance(11);
  const Solution full{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  EXPECT_FALSE(verify_solution(inst, full));  // d_F(A, B) > 0.9
  inst.deltas.cross = 10;
  EXPECT_TRUE(verify_solution(inst, full));
  EXPECT_FALSE(verify_solution(inst, {{1, 11}, {1, 11}}));  // too far from A
}

TEST(Cps, VerifyRejectsMalformedIndices) {
  const auto inst = unit_instance(11);
  EXPECT_THROW(verify_solution(inst, {{0, 2}, {1}}), std::out_of_range);
  EXPECT_THROW(verify_solution(inst, {{1, 12}, {1}}), std::out_of_range);
  EXPECT_THROW(verify_solution(inst, {{2, 2}, {1}}), std::invalid_argument);
  EXPECT_THROW(verify_solution(inst, {{}, {1}}), std::invalid_argument);
}

TEST(Cps, SolveUnitGadget) {
  const auto sol = solve(unit_instance(6));
  ASSERT_TRUE(sol.has_value());
  EXPECT_TRUE(verify_solution(unit_instance(6), *sol));
  EXPECT_EQ(std::max(sol->a_idx.size(), sol->b_idx.size()), 6u);
  EXPECT_EQ(sol->a_idx.size() + sol->b_idx.size(), 11u);
}

TEST(Cps, SolveBelowMinimumIsInfeasible) {
  const auto& g = gadget_template();
  const ParetoSet oracle = brute_force_cps(g.a, g.b, {kGadgetDelta, kGadgetDelta, kGadgetCross});
  EXPECT_EQ(oracle, (ParetoSet{{5, 6}, {6, 5}}));
  EXPECT_FALSE(solve(unit_instance(5)).has_value());
  EXPECT_FALSE(solve(unit_instance(5.9)).has_value());
}

TEST(Cps, SinglePoint) {
  const Chain3d p = make_chain({{1, 2, 3}});
  const auto sol = solve({p, p, {0.5, 0.5, 0.5}, 1});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (Solution{{1}, {1}}));
}

TEST(Cps, LengthOneFronts) {
  const Chain3d p = make_chain({{0, 0, 0}});
  const Chain3d q = make_chain({{0, 0, 1}});
  EXPECT_EQ(pareto_counts(p, q, {1, 1, 1}), (ParetoSet{{1, 1}}));
  EXPECT_TRUE(pareto_counts(p, q, {1, 1, 0.5}).empty());
}

TEST(Cps, IdenticalChainsReachOneOneIffOneBallSuffices) {
  std::mt19937 rng(32);
  std::uniform_real_distribution<double> delta(0.3, 3.0);
  for (int t = 0; t < 100; ++t) {
    const Chain3d a = support::random_walk(rng, 1 + t % 6);
    const double d = delta(rng);
    bool one_ball = false;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      bool all = true;
      for (Eigen::Index h = 0; h < a.cols(); ++h) all = all && within(dist(a.col(h), a.col(c)), d);
      one_ball = one_ball || all;
    }
    EXPECT_EQ(pareto_counts(a, a, {d, d, 0.0}).contains({1, 1}), one_ball);
  }
}

TEST(Cps, ParetoSolutionsCarryWitnesses) {
  std::mt19937 rng(33);
  for (int t = 0; t < 100; ++t) {
    const auto inst = support::random_instance(rng, 9);
    const auto sols = pareto_solutions(inst.a, inst.b, inst.deltas);
    ParetoSet counts;
    for (const auto& s : sols) {
      EXPECT_EQ(static_cast<int>(s.solution.a_idx.size()), s.counts.a);
      EXPECT_EQ(static_cast<int>(s.solution.b_idx.size()), s.counts.b);
      CpsInstance at = inst;
      at.k = std::max(s.counts.a, s.counts.b);
      EXPECT_TRUE(verify_solution(at, s.solution));
      counts.insert(s.counts);
    }
    EXPECT_EQ(counts.size(), sols.size());
    EXPECT_EQ(counts, pareto_counts(inst.a, inst.b, inst.deltas));
  }
}

TEST(Cps, MatchesExhaustiveOracles) {
  std::mt19937 rng(34);
  for (int t = 0; t < 120; ++t) {
    const auto inst = support::random_instance(rng, 7);
    const ParetoSet front = pareto_counts(inst.a, inst.b, inst.deltas);
    EXPECT_EQ(front, brute_force_cps(inst.a, inst.b, inst.deltas));
    EXPECT_EQ(front, support::oracle_front(inst.a, inst.b, inst.deltas));
  }
}

TEST(Cps, SolveAgreesWithFront) {
  std::mt19937 rng(35);
  for (int t = 0; t < 150; ++t) {
    const auto inst = support::random_instance(rng, 8);
    const auto sol = solve(inst);
    EXPECT_EQ(sol.has_value(), feasible(brute_force_cps(inst.a, inst.b, inst.deltas), inst.k));
    if (sol) EXPECT_TRUE(verify_solution(inst, *sol));
  }
}

TEST(Cps, ExactModelCoversRectangleModel) {
  std::mt19937 rng(36);
  for (int t = 0; t < 150; ++t) {
    const auto inst = support::random_instance(rng, 9);
    const auto d = build_diagram(inst.a, inst.b, inst.deltas.a, inst.deltas.b, inst.deltas.cross);
    const auto exact = pareto_counts(inst.a, inst.b, inst.deltas);
    for (const auto& p : pareto_paths(d)) EXPECT_TRUE(exact.covers(p));
  }
}

TEST(Cps, FeasibilityMonotoneInBudgetAndThresholds) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> grow(0.0, 0.6);
  for (int t = 0; t < 100; ++t) {
    const auto inst = support::random_instance(rng, 9);
    const bool base = solve(inst).has_value();
    CpsInstance more_k = inst;
    more_k.k += 1;
    if (base) EXPECT_TRUE(solve(more_k).has_value());
    for (int which = 0; which < 3; ++which) {
      CpsInstance looser = inst;
      double* field = which == 0 ? &looser.deltas.a : which == 1 ? &looser.deltas.b : &looser.deltas.cross;
      *field += grow(rng);
      if (base) EXPECT_TRUE(solve(looser).has_value());
    }
  }
}

TEST(Cps, StateCapThrows) {
  const auto gen = gen_instance(std::vector<int>{2, 2});
  EXPECT_THROW(solve(gen.instance, SolveOptions{5}), GuardError);
}

TEST(Cps, BruteForceGuard) {
  std::mt19937 rng(38);
  const Chain3d a = support::random_walk(rng, 13);
  EXPECT_THROW(brute_force_cps(a, a, {1, 1, 1}), GuardError);
}
