#ifndef CHAINPAIR_CPS_HPP
#define CHAINPAIR_CPS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chainpair/geometry.hpp"
#include "chainpair/pareto.hpp"

namespace chainpair {

/// Distance bounds of a chain pair simplification.
struct Deltas {
  double a = 0;      // d_F(A, A')
  double b = 0;      // d_F(B, B')
  double cross = 0;  // d_F(A', B')
  friend bool operator==(const Deltas&, const Deltas&) = default;
};

struct CpsInstance {
  Chain3d a;
  Chain3d b;
  Deltas deltas;
  double k = 1;  // vertex budget per simplified chain; may be fractional
};

/// Kept vertices, as strictly increasing 1-based indices.
struct Solution {
  std::vector<std::size_t> a_idx;
  std::vector<std::size_t> b_idx;
  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolveOptions {
  std::size_t state_cap = 100'000'000;
};

/// Columns of `chain` at the given 1-based indices.
Chain3d extract(const Chain3d& chain, const std::vector<std::size_t>& idx);

/// Throws std::out_of_range for an index outside its chain and
/// std::invalid_argument for an empty or non-increasing index list.
void check_indices(const Solution& sol, std::size_t m, std::size_t n);

/// Ground truth: |A'|, |B'| <= K and the three discrete Frechet bounds hold.
bool verify_solution(const CpsInstance& inst, const Solution& sol);

/// Exact solver. Throws GuardError when the state cap is reached.
///
/// Among feasible count pairs the one with the smallest max(|A'|, |B'|),
/// then the smallest |A'| + |B'|, then the smallest |A'| is returned.
std::optional<Solution> solve(const CpsInstance& inst, const SolveOptions& options = {});

struct ParetoSolution {
  ParetoPoint<int> counts;
  Solution solution;
};

/// Every non-dominated (|A'|, |B'|) with a witness, sorted by |A'|.
std::vector<ParetoSolution> pareto_solutions(const Chain3d& a, const Chain3d& b,
                                             const Deltas& deltas,
                                             const SolveOptions& options = {});

ParetoSet pareto_counts(const Chain3d& a, const Chain3d& b, const Deltas& deltas,
                        const SolveOptions& options = {});

/// Exhaustive subsequence enumeration; |A|, |B| <= 12.
ParetoSet brute_force_cps(const Chain3d& a, const Chain3d& b, const Deltas& deltas);

}  // namespace chainpair

#endif  // CHAINPAIR_CPS_HPP
