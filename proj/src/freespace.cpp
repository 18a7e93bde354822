#include "chainpair/freespace.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "detail/simplification_search.hpp"

namespace chainpair {

namespace {

// Default cap for the rectangle-model search; desk-scale diagrams stay far below it.
constexpr std::size_t kDiagramStateCap = 50'000'000;

std::vector<const IndexInterval*> a_runs(const FreeSpaceDiagram& d) {
  std::vector<const IndexInterval*> runs(d.m, nullptr);
  for (const auto& r : d.rects) runs[r.pair.i - 1] = &r.a;
  return runs;
}

std::vector<const IndexInterval*> b_runs(const FreeSpaceDiagram& d) {
  std::vector<const IndexInterval*> runs(d.n, nullptr);
  for (const auto& r : d.rects) runs[r.pair.j - 1] = &r.b;
  return runs;
}

detail::CoverageTable run_coverage(const std::vector<const IndexInterval*>& runs) {
  return detail::CoverageTable(runs.size(), [&](std::size_t c, std::size_t l) {
    return runs[c] != nullptr && runs[c]->contains(l + 1);
  });
}

using Cell = std::pair<std::size_t, std::size_t>;  // (a_end, b_end), 0-based

struct Level {
  std::size_t rect = 0;
  bool new_a = false;
  bool new_b = false;
  std::map<Cell, Cell> frontier;  // reached cell -> cell it came from
};

class PathEnumerator {
 public:
  PathEnumerator(const FreeSpaceDiagram& d, std::size_t limit)
      : d_(d), limit_(limit), order_(d.rects.size()) {
    const auto ar = a_runs(d);
    const auto br = b_runs(d);
    cover_a_ = run_coverage(ar);
    cover_b_ = run_coverage(br);
    for (std::size_t k = 0; k < order_.size(); ++k) order_[k] = k;
    std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return d.rects[x].pair < d.rects[y].pair;
    });
  }

  PathEnumeration run() {
    for (std::size_t r : order_) {
      const auto& p = d_.rects[r].pair;
      Level level{r, true, true, {}};
      const int ea = cover_a_.end(p.i - 1, 0);
      const int eb = cover_b_.end(p.j - 1, 0);
      for (int h = 0; h <= ea; ++h) {
        for (int g = 0; g <= eb; ++g) {
          level.frontier.emplace(Cell{static_cast<std::size_t>(h), static_cast<std::size_t>(g)},
                                 Cell{0, 0});
        }
      }
      if (level.frontier.empty()) continue;
      levels_.push_back(std::move(level));
      if (!descend()) break;
      levels_.pop_back();
    }
    return std::move(result_);
  }

 private:
  static std::vector<std::size_t> ends_after(const detail::CoverageTable& cover, std::size_t c,
                                             std::size_t prev_end) {
    std::vector<std::size_t> ends;
    const std::size_t l = prev_end + 1;
    if (l >= cover.size()) return ends;
    for (int h = static_cast<int>(l); h <= cover.end(c, l); ++h) {
      ends.push_back(static_cast<std::size_t>(h));
    }
    return ends;
  }

  // Returns false once the limit is exceeded.
  bool descend() {
    const Level& top = levels_.back();
    if (top.frontier.contains(Cell{d_.m - 1, d_.n - 1})) {
      if (result_.paths.size() == limit_) {
        result_.limit_exceeded = true;
        return false;
      }
      result_.paths.push_back(reconstruct());
    }
    const IndexPair cur = d_.rects[top.rect].pair;
    for (std::size_t r : order_) {
      const IndexPair next = d_.rects[r].pair;
      if (next.i < cur.i || next.j < cur.j || next == cur) continue;
      Level level{r, next.i > cur.i, next.j > cur.j, {}};
      for (const auto& [cell, parent] : levels_.back().frontier) {
        std::vector<std::size_t> ea{cell.first};
        std::vector<std::size_t> eb{cell.second};
        if (level.new_a) ea = ends_after(cover_a_, next.i - 1, cell.first);
        if (level.new_b) eb = ends_after(cover_b_, next.j - 1, cell.second);
        for (std::size_t h : ea) {
          for (std::size_t g : eb) level.frontier.emplace(Cell{h, g}, cell);
        }
      }
      if (level.frontier.empty()) continue;
      levels_.push_back(std::move(level));
      const bool go_on = descend();
      levels_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  RectPath reconstruct() const {
    RectPath path;
    Cell cell{d_.m - 1, d_.n - 1};
    std::vector<Cell> cells(levels_.size());
    for (std::size_t t = levels_.size(); t-- > 0;) {
      cells[t] = cell;
      cell = levels_[t].frontier.at(cell);
    }
    for (std::size_t t = 0; t < levels_.size(); ++t) {
      path.rects.push_back(levels_[t].rect);
      const std::size_t a_start = t == 0 ? 1 : cells[t - 1].first + 2;
      const std::size_t b_start = t == 0 ? 1 : cells[t - 1].second + 2;
      if (levels_[t].new_a) path.a_cover.push_back({a_start, cells[t].first + 1});
      if (levels_[t].new_b) path.b_cover.push_back({b_start, cells[t].second + 1});
    }
    return path;
  }

  const FreeSpaceDiagram& d_;
  std::size_t limit_;
  std::vector<std::size_t> order_;
  detail::CoverageTable cover_a_;
  detail::CoverageTable cover_b_;
  std::vector<Level> levels_;
  PathEnumeration result_;
};

}  // namespace

std::size_t FreeSpaceDiagram::find(const IndexPair& p) const {
  const auto it = std::find_if(rects.begin(), rects.end(),
                               [&](const Rect& r) { return r.pair == p; });
  return static_cast<std::size_t>(it - rects.begin());
}

void validate(const FreeSpaceDiagram& d) {
  std::set<IndexPair> seen;
  std::map<std::size_t, IndexInterval> a_of;
  std::map<std::size_t, IndexInterval> b_of;
  for (const auto& r : d.rects) {
    const auto& p = r.pair;
    if (!seen.insert(p).second) {
      throw std::invalid_argument("diagram repeats pair (" + std::to_string(p.i) + "," +
                                  std::to_string(p.j) + ")");
    }
    if (r.a.lo < 1 || r.a.hi > d.m || r.a.lo > r.a.hi || r.b.lo < 1 || r.b.hi > d.n ||
        r.b.lo > r.b.hi || !r.a.contains(p.i) || !r.b.contains(p.j)) {
      throw std::invalid_argument("rectangle for pair (" + std::to_string(p.i) + "," +
                                  std::to_string(p.j) + ") is out of bounds");
    }
    if (a_of.try_emplace(p.i, r.a).first->second != r.a ||
        b_of.try_emplace(p.j, r.b).first->second != r.b) {
      throw std::invalid_argument("rectangles disagree on a vertex's run");
    }
  }
}

std::vector<IndexPair> RectPath::pairs(const FreeSpaceDiagram& diagram) const {
  std::vector<IndexPair> out;
  for (std::size_t r : rects) out.push_back(diagram.rects.at(r).pair);
  return out;
}

PairSet close_pairs(const Chain3d& a, const Chain3d& b, double delta3) {
  PairSet pairs;
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (within(dist(a.col(i), b.col(j)), delta3)) {
        pairs.push_back({static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1)});
      }
    }
  }
  return pairs;
}

FreeSpaceDiagram build_diagram(const Chain3d& a, const Chain3d& b, double delta1, double delta2,
                               double delta3) {
  FreeSpaceDiagram d;
  d.m = static_cast<std::size_t>(a.cols());
  d.n = static_cast<std::size_t>(b.cols());
  for (const auto& p : close_pairs(a, b, delta3)) {
    d.rects.push_back({p, sphere_subchain(a, p.i, delta1), sphere_subchain(b, p.j, delta2)});
  }
  return d;
}

ParetoSet pareto_paths(const FreeSpaceDiagram& diagram) {
  validate(diagram);
  detail::SearchProblem<int> problem;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& r : diagram.rects) pairs.emplace_back(r.pair.i - 1, r.pair.j - 1);
  problem.set_pairs(diagram.m, diagram.n, pairs);
  problem.cover_a = run_coverage(a_runs(diagram));
  problem.cover_b = run_coverage(b_runs(diagram));
  problem.shared_boundary = false;
  problem.weight_a.assign(diagram.m, 1);
  problem.weight_b.assign(diagram.n, 1);

  ParetoSet front;
  for (const auto& outcome : detail::SimplificationSearch<int>(problem, kDiagramStateCap).run()) {
    front.insert(outcome.cost_a, outcome.cost_b);
  }
  return front;
}

PathEnumeration enumerate_paths(const FreeSpaceDiagram& diagram, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("enumerate_paths: limit must be at least 1");
  validate(diagram);
  if (diagram.m == 0 || diagram.n == 0) return {};
  return PathEnumerator(diagram, limit).run();
}

void write_csv(std::ostream& os, const FreeSpaceDiagram& diagram) {
  os << "i,j,aLo,aHi,bLo,bHi\n";
  for (const auto& r : diagram.rects) {
    os << r.pair.i << ',' << r.pair.j << ',' << r.a.lo << ',' << r.a.hi << ',' << r.b.lo << ','
       << r.b.hi << '\n';
  }
}

}  // namespace chainpair
