#ifndef CHAINPAIR_FRECHET_HPP
#define CHAINPAIR_FRECHET_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "chainpair/errors.hpp"
#include "chainpair/geometry.hpp"

namespace chainpair {

/// Monotone alignment of two chains as 1-based (p, q) index pairs.
using Coupling = std::vector<std::pair<std::size_t, std::size_t>>;

namespace detail {

template <typename Derived1, typename Derived2>
void require_nonempty(const Eigen::MatrixBase<Derived1>& p,
                      const Eigen::MatrixBase<Derived2>& q) {
  if (p.cols() == 0 || q.cols() == 0) {
    throw std::invalid_argument("discrete Frechet distance of an empty chain");
  }
}

// cost(i, j) = bottleneck value of the best coupling of P[0..i] with Q[0..j].
template <typename Derived1, typename Derived2>
Eigen::Matrix<typename Derived1::Scalar, Eigen::Dynamic, Eigen::Dynamic> coupling_table(
    const Eigen::MatrixBase<Derived1>& p, const Eigen::MatrixBase<Derived2>& q) {
  using Scalar = typename Derived1::Scalar;
  const Eigen::Index rows = p.cols();
  const Eigen::Index cols = q.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cost(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Scalar d = dist(p.col(i), q.col(j));
      if (i == 0 && j == 0) {
        cost(i, j) = d;
        continue;
      }
      Scalar best = std::numeric_limits<Scalar>::infinity();
      if (i > 0) best = std::min(best, cost(i - 1, j));
      if (j > 0) best = std::min(best, cost(i, j - 1));
      if (i > 0 && j > 0) best = std::min(best, cost(i - 1, j - 1));
      cost(i, j) = std::max(best, d);
    }
  }
  return cost;
}

template <typename Derived1, typename Derived2, typename Scalar>
void enumerate_couplings(const Eigen::MatrixBase<Derived1>& p,
                         const Eigen::MatrixBase<Derived2>& q, Eigen::Index i,
                         Eigen::Index j, Scalar running, Scalar& best) {
  running = std::max(running, dist(p.col(i), q.col(j)));
  if (i + 1 == p.cols() && j + 1 == q.cols()) {
    best = std::min(best, running);
    return;
  }
  if (i + 1 < p.cols()) enumerate_couplings(p, q, i + 1, j, running, best);
  if (j + 1 < q.cols()) enumerate_couplings(p, q, i, j + 1, running, best);
  if (i + 1 < p.cols() && j + 1 < q.cols()) {
    enumerate_couplings(p, q, i + 1, j + 1, running, best);
  }
}

}  // namespace detail

template <typename Derived1, typename Derived2>
typename Derived1::Scalar discrete_frechet(const Eigen::MatrixBase<Derived1>& p,
                                           const Eigen::MatrixBase<Derived2>& q) {
  detail::require_nonempty(p, q);
  const auto cost = detail::coupling_table(p, q);
  return cost(cost.rows() - 1, cost.cols() - 1);
}

/// Decides within(discrete_frechet(p, q), delta) by reachability over the free
/// cells. A cell's distance is only evaluated once a predecessor is reachable.
template <typename Derived1, typename Derived2>
bool frechet_leq(const Eigen::MatrixBase<Derived1>& p, const Eigen::MatrixBase<Derived2>& q,
                 typename Derived1::Scalar delta) {
  detail::require_nonempty(p, q);
  const Eigen::Index rows = p.cols();
  const Eigen::Index cols = q.cols();
  std::vector<char> prev(static_cast<std::size_t>(cols), 0);
  std::vector<char> curr(static_cast<std::size_t>(cols), 0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    bool any = false;
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      bool entered = (i == 0 && j == 0);
      if (i > 0) entered = entered || prev[uj] || (j > 0 && prev[uj - 1]);
      if (j > 0) entered = entered || curr[uj - 1];
      curr[uj] = entered && within(dist(p.col(i), q.col(j)), delta);
      any = any || curr[uj];
    }
    if (!any) return false;
    std::swap(prev, curr);
  }
  return prev[static_cast<std::size_t>(cols - 1)] != 0;
}

/// An optimal coupling. From each cell the walk takes the lexicographically
/// smallest successor that keeps the bottleneck at the optimum.
template <typename Derived1, typename Derived2>
Coupling frechet_coupling(const Eigen::MatrixBase<Derived1>& p,
                          const Eigen::MatrixBase<Derived2>& q) {
  using Scalar = typename Derived1::Scalar;
  detail::require_nonempty(p, q);
  const Eigen::Index rows = p.cols();
  const Eigen::Index cols = q.cols();
  // tail(i, j) = bottleneck of the best coupling from (i, j) to the end.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> tail(rows, cols);
  for (Eigen::Index i = rows - 1; i >= 0; --i) {
    for (Eigen::Index j = cols - 1; j >= 0; --j) {
      const Scalar d = dist(p.col(i), q.col(j));
      if (i == rows - 1 && j == cols - 1) {
        tail(i, j) = d;
        continue;
      }
      Scalar best = std::numeric_limits<Scalar>::infinity();
      if (i + 1 < rows) best = std::min(best, tail(i + 1, j));
      if (j + 1 < cols) best = std::min(best, tail(i, j + 1));
      if (i + 1 < rows && j + 1 < cols) best = std::min(best, tail(i + 1, j + 1));
      tail(i, j) = std::max(best, d);
    }
  }
  const Scalar optimum = tail(0, 0);
  Coupling coupling;
  Eigen::Index i = 0;
  Eigen::Index j = 0;
  coupling.emplace_back(1, 1);
  while (i + 1 < rows || j + 1 < cols) {
    // (i, j+1) < (i+1, j) < (i+1, j+1) lexicographically.
    const std::pair<Eigen::Index, Eigen::Index> candidates[] = {
        {i, j + 1}, {i + 1, j}, {i + 1, j + 1}};
    for (const auto& [ni, nj] : candidates) {
      if (ni < rows && nj < cols && tail(ni, nj) <= optimum) {
        i = ni;
        j = nj;
        break;
      }
    }
    coupling.emplace_back(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1));
  }
  return coupling;
}

/// Exhaustive minimum over all monotone couplings. Only for |p| + |q| <= 16.
template <typename Derived1, typename Derived2>
typename Derived1::Scalar brute_force_frechet(const Eigen::MatrixBase<Derived1>& p,
                                              const Eigen::MatrixBase<Derived2>& q) {
  using Scalar = typename Derived1::Scalar;
  detail::require_nonempty(p, q);
  if (p.cols() + q.cols() > 16) {
    throw GuardError("brute_force_frechet: |P| + |Q| must not exceed 16");
  }
  Scalar best = std::numeric_limits<Scalar>::infinity();
  detail::enumerate_couplings(p, q, 0, 0, Scalar(0), best);
  return best;
}

}  // namespace chainpair

#endif  // CHAINPAIR_FRECHET_HPP
