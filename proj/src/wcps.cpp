#include "chainpair/wcps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chainpair/errors.hpp"
#include "chainpair/frechet.hpp"
#include "detail/exact_problem.hpp"

namespace chainpair {

namespace {

std::vector<detail::SearchOutcome<double>> weighted_front(const WcpsInstance& inst,
                                                          const SolveOptions& options) {
  validate(inst);
  auto problem = detail::exact_problem<double>(inst.a, inst.b, inst.deltas, inst.weight_a,
                                               inst.weight_b);
  return detail::SimplificationSearch<double>(problem, options.state_cap).run();
}

double sum_weights(const std::vector<double>& weights, const std::vector<std::size_t>& idx) {
  double total = 0;
  for (std::size_t i : idx) total += weights.at(i - 1);
  return total;
}

}  // namespace

void validate(const WcpsInstance& inst) {
  if (inst.a.cols() == 0 || inst.b.cols() == 0) throw std::invalid_argument("empty chain");
  if (inst.weight_a.size() != static_cast<std::size_t>(inst.a.cols()) ||
      inst.weight_b.size() != static_cast<std::size_t>(inst.b.cols())) {
    throw std::invalid_argument("weight list length does not match its chain");
  }
  auto positive = [](double w) { return w > 0; };
  if (!std::all_of(inst.weight_a.begin(), inst.weight_a.end(), positive) ||
      !std::all_of(inst.weight_b.begin(), inst.weight_b.end(), positive)) {
    throw std::invalid_argument("vertex weights must be strictly positive");
  }
}

WcpsInstance unit_weights(const CpsInstance& inst) {
  return {inst.a,
          inst.b,
          std::vector<double>(static_cast<std::size_t>(inst.a.cols()), 1.0),
          std::vector<double>(static_cast<std::size_t>(inst.b.cols()), 1.0),
          inst.deltas,
          inst.k};
}

std::pair<double, double> weight_of(const Solution& sol, const WcpsInstance& inst) {
  check_indices(sol, inst.weight_a.size(), inst.weight_b.size());
  return {sum_weights(inst.weight_a, sol.a_idx), sum_weights(inst.weight_b, sol.b_idx)};
}

bool verify_wcps(const WcpsInstance& inst, const Solution& sol) {
  validate(inst);
  check_indices(sol, static_cast<std::size_t>(inst.a.cols()), static_cast<std::size_t>(inst.b.cols()));
  const auto [wa, wb] = weight_of(sol, inst);
  if (wa > inst.k || wb > inst.k) return false;
  const Chain3d a_kept = extract(inst.a, sol.a_idx);
  const Chain3d b_kept = extract(inst.b, sol.b_idx);
  return frechet_leq(inst.a, a_kept, inst.deltas.a) && frechet_leq(inst.b, b_kept, inst.deltas.b) &&
         frechet_leq(a_kept, b_kept, inst.deltas.cross);
}

std::optional<Solution> solve_wcps(const WcpsInstance& inst, const SolveOptions& options) {
  const auto front = weighted_front(inst, options);
  const detail::SearchOutcome<double>* best = nullptr;
  auto rank = [](const detail::SearchOutcome<double>& o) {
    return std::tuple(std::max(o.cost_a, o.cost_b), o.cost_a + o.cost_b, o.cost_a);
  };
  for (const auto& o : front) {
    if (o.cost_a > inst.k || o.cost_b > inst.k) continue;
    if (best == nullptr || rank(o) < rank(*best)) best = &o;
  }
  if (best == nullptr) return std::nullopt;
  return detail::solution_from_steps(best->steps);
}

ParetoFront<double> weight_front(const WcpsInstance& inst, const SolveOptions& options) {
  ParetoFront<double> front;
  for (const auto& o : weighted_front(inst, options)) front.insert(o.cost_a, o.cost_b);
  return front;
}

std::optional<Solution> brute_force_wcps(const WcpsInstance& inst) {
  validate(inst);
  if (inst.a.cols() > 14 || inst.b.cols() > 14) {
    throw GuardError("brute_force_wcps: chains longer than 14");
  }
  struct Candidate {
    std::vector<std::size_t> idx;
    Chain3d kept;
  };
  auto candidates = [&](const Chain3d& chain, const std::vector<double>& weights, double delta) {
    std::vector<Candidate> out;
    const unsigned total = 1U << chain.cols();
    for (unsigned mask = 1; mask < total; ++mask) {
      auto idx = detail::mask_indices(mask);
      if (sum_weights(weights, idx) > inst.k) continue;
      Chain3d kept = extract(chain, idx);
      if (frechet_leq(chain, kept, delta)) out.push_back({std::move(idx), std::move(kept)});
    }
    // Lexicographic order of the index lists fixes which witness is reported.
    std::sort(out.begin(), out.end(),
              [](const Candidate& x, const Candidate& y) { return x.idx < y.idx; });
    return out;
  };
  const auto a_side = candidates(inst.a, inst.weight_a, inst.deltas.a);
  const auto b_side = candidates(inst.b, inst.weight_b, inst.deltas.b);
  for (const auto& ca : a_side) {
    for (const auto& cb : b_side) {
      if (frechet_leq(ca.kept, cb.kept, inst.deltas.cross)) return Solution{ca.idx, cb.idx};
    }
  }
  return std::nullopt;
}

}  // namespace chainpair
