#ifndef CHAINPAIR_GEOMETRY_HPP
#define CHAINPAIR_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace chainpair {

/// A vertex in R^3.
template <typename Scalar>
using Point3 = Eigen::Matrix<Scalar, 3, 1>;

/// A polygonal chain stored column-wise: column k holds vertex k+1.
///
/// All public interfaces address vertices with 1-based indices; use
/// vertex() rather than col() when translating an interface index.
template <typename Scalar>
using Chain = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

using Point3d = Point3<double>;
using Chain3d = Chain<double>;

/// Closed range [lo, hi] of 1-based vertex indices.
struct IndexInterval {
  std::size_t lo = 1;
  std::size_t hi = 1;

  std::size_t size() const { return hi - lo + 1; }
  bool contains(std::size_t i) const { return lo <= i && i <= hi; }
  bool contains(const IndexInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

/// Absolute slack on every distance-vs-threshold test. Translated gadget
/// copies meet some thresholds exactly (|a_11 b_11| = 0.9) only up to rounding.
inline constexpr double kDistanceSlack = 1e-9;

/// The one comparison used for "distance d is within threshold delta".
template <typename Scalar>
bool within(Scalar d, Scalar delta) {
  return d <= delta + static_cast<Scalar>(kDistanceSlack);
}

template <typename Derived1, typename Derived2>
typename Derived1::Scalar dist(const Eigen::MatrixBase<Derived1>& p,
                               const Eigen::MatrixBase<Derived2>& q) {
  return (p - q).norm();
}

/// Vertex i (1-based) of a chain.
template <typename Derived>
auto vertex(const Eigen::MatrixBase<Derived>& chain, std::size_t i) {
  if (i < 1 || i > static_cast<std::size_t>(chain.cols())) {
    throw std::out_of_range("vertex index " + std::to_string(i) +
                            " outside [1, " + std::to_string(chain.cols()) + "]");
  }
  return chain.col(static_cast<Eigen::Index>(i - 1));
}

template <typename Scalar = double>
Chain<Scalar> make_chain(std::initializer_list<std::array<Scalar, 3>> vertices) {
  Chain<Scalar> chain(3, static_cast<Eigen::Index>(vertices.size()));
  Eigen::Index k = 0;
  for (const auto& v : vertices) {
    chain.col(k++) << v[0], v[1], v[2];
  }
  return chain;
}

/// Maximal contiguous run of vertices around x_i that stays inside the
/// closed ball of radius delta centred at x_i.
template <typename Derived>
IndexInterval sphere_subchain(const Eigen::MatrixBase<Derived>& chain, std::size_t i,
                              typename Derived::Scalar delta) {
  const auto center = vertex(chain, i);
  const auto n = static_cast<std::size_t>(chain.cols());
  IndexInterval run{i, i};
  while (run.lo > 1 && within(dist(vertex(chain, run.lo - 1), center), delta)) --run.lo;
  while (run.hi < n && within(dist(vertex(chain, run.hi + 1), center), delta)) ++run.hi;
  return run;
}

}  // namespace chainpair

#endif  // CHAINPAIR_GEOMETRY_HPP
