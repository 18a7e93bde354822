#include "chainpair/cps.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "chainpair/errors.hpp"
#include "chainpair/frechet.hpp"
#include "detail/exact_problem.hpp"

namespace chainpair {

namespace {

void check_deltas(const Deltas& d) {
  if (!(d.a >= 0) || !(d.b >= 0) || !(d.cross >= 0)) {
    throw std::invalid_argument("distance bounds must be non-negative");
  }
}

std::vector<detail::SearchOutcome<int>> exact_front(const Chain3d& a, const Chain3d& b,
                                                    const Deltas& deltas,
                                                    const SolveOptions& options) {
  check_deltas(deltas);
  if (a.cols() == 0 || b.cols() == 0) throw std::invalid_argument("empty chain");
  auto problem = detail::exact_problem<int>(a, b, deltas,
                                            std::vector<int>(static_cast<std::size_t>(a.cols()), 1),
                                            std::vector<int>(static_cast<std::size_t>(b.cols()), 1));
  return detail::SimplificationSearch<int>(problem, options.state_cap).run();
}

}  // namespace

Chain3d extract(const Chain3d& chain, const std::vector<std::size_t>& idx) {
  Chain3d out(3, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = vertex(chain, idx[k]);
  }
  return out;
}

void check_indices(const Solution& sol, std::size_t m, std::size_t n) {
  auto check = [](const std::vector<std::size_t>& idx, std::size_t size, const char* name) {
    if (idx.empty()) throw std::invalid_argument(std::string(name) + " keeps no vertex");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1 || idx[k] > size) {
        throw std::out_of_range(std::string(name) + " index " + std::to_string(idx[k]) +
                                " outside [1, " + std::to_string(size) + "]");
      }
      if (k > 0 && idx[k] <= idx[k - 1]) {
        throw std::invalid_argument(std::string(name) + " indices are not strictly increasing");
      }
    }
  };
  check(sol.a_idx, m, "A'");
  check(sol.b_idx, n, "B'");
}

bool verify_solution(const CpsInstance& inst, const Solution& sol) {
  check_indices(sol, static_cast<std::size_t>(inst.a.cols()), static_cast<std::size_t>(inst.b.cols()));
  if (static_cast<double>(sol.a_idx.size()) > inst.k ||
      static_cast<double>(sol.b_idx.size()) > inst.k) {
    return false;
  }
  const Chain3d a_kept = extract(inst.a, sol.a_idx);
  const Chain3d b_kept = extract(inst.b, sol.b_idx);
  return frechet_leq(inst.a, a_kept, inst.deltas.a) && frechet_leq(inst.b, b_kept, inst.deltas.b) &&
         frechet_leq(a_kept, b_kept, inst.deltas.cross);
}

std::optional<Solution> solve(const CpsInstance& inst, const SolveOptions& options) {
  const auto front = exact_front(inst.a, inst.b, inst.deltas, options);
  const detail::SearchOutcome<int>* best = nullptr;
  auto rank = [](const detail::SearchOutcome<int>& o) {
    return std::tuple(std::max(o.cost_a, o.cost_b), o.cost_a + o.cost_b, o.cost_a);
  };
  for (const auto& o : front) {
    if (static_cast<double>(o.cost_a) > inst.k || static_cast<double>(o.cost_b) > inst.k) continue;
    if (best == nullptr || rank(o) < rank(*best)) best = &o;
  }
  if (best == nullptr) return std::nullopt;
  return detail::solution_from_steps(best->steps);
}

std::vector<ParetoSolution> pareto_solutions(const Chain3d& a, const Chain3d& b,
                                             const Deltas& deltas, const SolveOptions& options) {
  std::vector<ParetoSolution> out;
  for (const auto& o : exact_front(a, b, deltas, options)) {
    out.push_back({{o.cost_a, o.cost_b}, detail::solution_from_steps(o.steps)});
  }
  return out;
}

ParetoSet pareto_counts(const Chain3d& a, const Chain3d& b, const Deltas& deltas,
                        const SolveOptions& options) {
  ParetoSet front;
  for (const auto& o : exact_front(a, b, deltas, options)) front.insert(o.cost_a, o.cost_b);
  return front;
}

ParetoSet brute_force_cps(const Chain3d& a, const Chain3d& b, const Deltas& deltas) {
  check_deltas(deltas);
  if (a.cols() == 0 || b.cols() == 0) throw std::invalid_argument("empty chain");
  if (a.cols() > 12 || b.cols() > 12) throw GuardError("brute_force_cps: chains longer than 12");

  // Candidate simplifications of one chain, ordered by size.
  auto candidates = [](const Chain3d& chain, double delta) {
    std::vector<Chain3d> out;
    const unsigned total = 1U << chain.cols();
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < total; ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
      return std::popcount(x) < std::popcount(y);
    });
    for (unsigned mask : masks) {
      Chain3d kept = extract(chain, detail::mask_indices(mask));
      if (frechet_leq(chain, kept, delta)) out.push_back(std::move(kept));
    }
    return out;
  };
  const auto a_side = candidates(a, deltas.a);
  const auto b_side = candidates(b, deltas.b);

  ParetoSet front;
  for (const auto& ak : a_side) {
    for (const auto& bk : b_side) {
      if (frechet_leq(ak, bk, deltas.cross)) {
        // b_side is size-ordered: the first match is the smallest B' for this A'.
        front.insert(static_cast<int>(ak.cols()), static_cast<int>(bk.cols()));
        break;
      }
    }
  }
  return front;
}

}  // namespace chainpair
