#ifndef CHAINPAIR_WCPS_HPP
#define CHAINPAIR_WCPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chainpair/cps.hpp"
#include "chainpair/pareto.hpp"

namespace chainpair {

/// Chain pair simplification with a positive weight on every vertex; each
/// simplified chain's total weight must stay within k.
struct WcpsInstance {
  Chain3d a;
  Chain3d b;
  std::vector<double> weight_a;
  std::vector<double> weight_b;
  Deltas deltas;
  double k = 0;
};

/// Throws std::invalid_argument unless both weight lists match their chains
/// and every weight is strictly positive.
void validate(const WcpsInstance& inst);

/// All-ones weights with the count bound as budget.
WcpsInstance unit_weights(const CpsInstance& inst);

std::pair<double, double> weight_of(const Solution& sol, const WcpsInstance& inst);

bool verify_wcps(const WcpsInstance& inst, const Solution& sol);

/// Exact; a Pareto search over (weight of A', weight of B').
std::optional<Solution> solve_wcps(const WcpsInstance& inst, const SolveOptions& options = {});

/// Non-dominated achievable (weight of A', weight of B') pairs.
ParetoFront<double> weight_front(const WcpsInstance& inst, const SolveOptions& options = {});

/// Exhaustive subsequence search; |A|, |B| <= 14.
std::optional<Solution> brute_force_wcps(const WcpsInstance& inst);

}  // namespace chainpair

#endif  // CHAINPAIR_WCPS_HPP
