#ifndef CHAINPAIR_PARETO_HPP
#define CHAINPAIR_PARETO_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace chainpair {

template <typename Cost>
struct ParetoPoint {
  Cost a{};
  Cost b{};

  /// <= in both coordinates and < in at least one.
  bool dominates(const ParetoPoint& other) const {
    return a <= other.a && b <= other.b && (a < other.a || b < other.b);
  }
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
  friend auto operator<=>(const ParetoPoint&, const ParetoPoint&) = default;
};

/// Non-dominated (cost on A, cost on B) pairs, kept sorted by the A cost.
template <typename Cost>
class ParetoFront {
 public:
  using Point = ParetoPoint<Cost>;

  ParetoFront() = default;
  ParetoFront(std::initializer_list<Point> points) {
    for (const auto& p : points) insert(p);
  }

  /// Adds p unless an existing point dominates or equals it; evicts points p dominates.
  bool insert(const Point& p) {
    for (const auto& q : points_) {
      if (q == p || q.dominates(p)) return false;
    }
    std::erase_if(points_, [&](const Point& q) { return p.dominates(q); });
    points_.insert(std::upper_bound(points_.begin(), points_.end(), p), p);
    return true;
  }
  bool insert(Cost a, Cost b) { return insert(Point{a, b}); }

  bool contains(const Point& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
  }
  /// Some member is <= p in both coordinates.
  bool covers(const Point& p) const {
    return std::any_of(points_.begin(), points_.end(),
                       [&](const Point& q) { return q.a <= p.a && q.b <= p.b; });
  }

  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

 private:
  std::vector<Point> points_;
};

/// Achievable (|A'|, |B'|) vertex counts.
using ParetoSet = ParetoFront<int>;

template <typename Cost>
std::ostream& operator<<(std::ostream& os, const ParetoFront<Cost>& front) {
  os << '{';
  bool first = true;
  for (const auto& p : front) {
    os << (first ? "" : ", ") << '(' << p.a << ',' << p.b << ')';
    first = false;
  }
  return os << '}';
}

}  // namespace chainpair

#endif  // CHAINPAIR_PARETO_HPP
