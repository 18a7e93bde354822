#ifndef CHAINPAIR_DETAIL_EXACT_PROBLEM_HPP
#define CHAINPAIR_DETAIL_EXACT_PROBLEM_HPP

#include <vector>

#include "chainpair/cps.hpp"
#include "chainpair/freespace.hpp"
#include "detail/simplification_search.hpp"

namespace chainpair::detail {

// Exact semantics: a kept vertex may stand in for any contiguous block of
// rows inside its delta-ball, and consecutive blocks may share a row.
template <typename Cost>
SearchProblem<Cost> exact_problem(const Chain3d& a, const Chain3d& b, const Deltas& deltas,
                                  std::vector<Cost> weight_a, std::vector<Cost> weight_b) {
  SearchProblem<Cost> problem;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : close_pairs(a, b, deltas.cross)) pairs.emplace_back(p.i - 1, p.j - 1);
  problem.set_pairs(static_cast<std::size_t>(a.cols()), static_cast<std::size_t>(b.cols()), pairs);
  problem.cover_a = CoverageTable(problem.m, [&](std::size_t c, std::size_t l) {
    return within(dist(a.col(static_cast<Eigen::Index>(l)), a.col(static_cast<Eigen::Index>(c))), deltas.a);
  });
  problem.cover_b = CoverageTable(problem.n, [&](std::size_t c, std::size_t l) {
    return within(dist(b.col(static_cast<Eigen::Index>(l)), b.col(static_cast<Eigen::Index>(c))), deltas.b);
  });
  problem.shared_boundary = true;
  problem.weight_a = std::move(weight_a);
  problem.weight_b = std::move(weight_b);
  return problem;
}

inline Solution solution_from_steps(const std::vector<SearchStep>& steps) {
  Solution sol;
  for (const auto& s : steps) {
    if (sol.a_idx.empty() || sol.a_idx.back() != s.i + 1) sol.a_idx.push_back(s.i + 1);
    if (sol.b_idx.empty() || sol.b_idx.back() != s.j + 1) sol.b_idx.push_back(s.j + 1);
  }
  return sol;
}

// Nonempty subsequences of [1..size] as bitmasks, for the brute-force oracles.
inline std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) idx.push_back(k + 1);
  }
  return idx;
}

}  // namespace chainpair::detail

#endif  // CHAINPAIR_DETAIL_EXACT_PROBLEM_HPP
