#ifndef CHAINPAIR_DETAIL_SIMPLIFICATION_SEARCH_HPP
#define CHAINPAIR_DETAIL_SIMPLIFICATION_SEARCH_HPP

// Pareto search over simultaneous simplifications of two chains.
//
// A candidate is a monotone path of kept pairs (i, j) (the coupling of A'
// with B'). Every kept vertex c of A is additionally assigned a contiguous
// block of original rows [l, h] it stands in for (the coupling of A with
// A'); blocks start at row 0, end at row m-1 and each block begins at the
// previous block's end row (shared_boundary) or the row after it. Which rows
// a kept vertex may stand in for is supplied by a CoverageTable, so the same
// search runs both the exact ball semantics and the rectangle model.
//
// State: (i, j, a_end, b_end), all 0-based. Every transition strictly
// increases (i, j) lexicographically, so visiting states in key order is a
// topological order and each state's labels are final when it is expanded.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chainpair/errors.hpp"

namespace chainpair::detail {

/// end(c, l): the largest h such that rows l..h may all be covered by kept
/// vertex c, or -1 when row l itself may not.
class CoverageTable {
 public:
  CoverageTable() = default;

  template <typename Admissible>
  CoverageTable(std::size_t size, Admissible&& admissible) : size_(size), end_(size * size, -1) {
    for (std::size_t c = 0; c < size; ++c) {
      for (std::size_t l = size; l-- > 0;) {
        if (!admissible(c, l)) continue;
        const bool extends = l + 1 < size && end_[c * size + l + 1] >= 0;
        end_[c * size + l] = extends ? end_[c * size + l + 1] : static_cast<int>(l);
      }
    }
  }

  std::size_t size() const { return size_; }
  int end(std::size_t c, std::size_t l) const { return end_[c * size_ + l]; }

 private:
  std::size_t size_ = 0;
  std::vector<int> end_;
};

template <typename Cost>
struct SearchProblem {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<char> allowed;                       // m*n, row-major in i
  std::vector<std::vector<std::size_t>> partners;  // partners[i] = sorted j with allowed(i, j)
  CoverageTable cover_a;
  CoverageTable cover_b;
  bool shared_boundary = true;
  std::vector<Cost> weight_a;
  std::vector<Cost> weight_b;

  bool is_allowed(std::size_t i, std::size_t j) const { return allowed[i * n + j] != 0; }

  void set_pairs(std::size_t rows, std::size_t cols, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    m = rows;
    n = cols;
    allowed.assign(m * n, 0);
    partners.assign(m, {});
    for (const auto& [i, j] : pairs) allowed[i * n + j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_allowed(i, j)) partners[i].push_back(j);
      }
    }
  }
};

struct SearchStep {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t a_end = 0;
  std::size_t b_end = 0;
};

template <typename Cost>
struct SearchOutcome {
  Cost cost_a{};
  Cost cost_b{};
  std::vector<SearchStep> steps;
};

template <typename Cost>
class SimplificationSearch {
 public:
  SimplificationSearch(const SearchProblem<Cost>& problem, std::size_t state_cap)
      : problem_(problem), state_cap_(state_cap) {}

  /// One outcome per point of the final Pareto front, sorted by cost_a.
  std::vector<SearchOutcome<Cost>> run() {
    const auto& p = problem_;
    if (p.m == 0 || p.n == 0) return {};
    for (std::size_t i = 0; i < p.m; ++i) {
      const auto ends_a = first_ends(p.cover_a, i);
      if (ends_a.empty()) continue;
      for (std::size_t j : p.partners[i]) {
        for (std::size_t ea : ends_a) {
          for (std::size_t eb : first_ends(p.cover_b, j)) {
            relax({i, j, ea, eb}, Label{p.weight_a[i], p.weight_b[j], -1, -1});
          }
        }
      }
    }
    for (auto it = index_.begin(); it != index_.end(); ++it) expand(it->second);
    return collect();
  }

  std::size_t states_visited() const { return states_.size(); }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

  struct Label {
    Cost a;
    Cost b;
    std::int64_t pred_state;
    std::int64_t pred_label;
  };

  struct State {
    SearchStep step;
    std::vector<Label> labels;
  };

  std::vector<std::size_t> first_ends(const CoverageTable& cover, std::size_t c) const {
    std::vector<std::size_t> ends;
    const int e = cover.end(c, 0);
    for (int h = 0; h <= e; ++h) ends.push_back(static_cast<std::size_t>(h));
    return ends;
  }

  // Block end rows available to a newly kept vertex c after rows 0..prev_end.
  std::vector<std::size_t> next_ends(const CoverageTable& cover, std::size_t c,
                                     std::size_t prev_end) const {
    std::vector<std::size_t> ends;
    const std::size_t first_start = problem_.shared_boundary ? prev_end : prev_end + 1;
    for (std::size_t l = first_start; l <= prev_end + 1 && l < cover.size(); ++l) {
      const int e = cover.end(c, l);
      for (int h = static_cast<int>(l); h <= e; ++h) ends.push_back(static_cast<std::size_t>(h));
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    return ends;
  }

  void relax(const SearchStep& step, const Label& label) {
    const Key key{step.i, step.j, step.a_end, step.b_end};
    auto [it, inserted] = index_.try_emplace(key, states_.size());
    if (inserted) {
      if (states_.size() >= state_cap_) {
        throw GuardError("simplification search exceeded its cap of " +
                         std::to_string(state_cap_) + " states");
      }
      states_.push_back(State{step, {}});
    }
    insert_label(states_[it->second].labels, label);
  }

  static void insert_label(std::vector<Label>& labels, const Label& label) {
    for (const auto& l : labels) {
      if (l.a <= label.a && l.b <= label.b) return;
    }
    std::erase_if(labels, [&](const Label& l) { return label.a <= l.a && label.b <= l.b; });
    labels.push_back(label);
  }

  void extend(std::size_t from, const SearchStep& to, Cost add_a, Cost add_b) {
    // states_ may reallocate inside relax(); index, never hold references.
    const std::size_t count = states_[from].labels.size();
    for (std::size_t k = 0; k < count; ++k) {
      const Label& l = states_[from].labels[k];
      relax(to, Label{l.a + add_a, l.b + add_b, static_cast<std::int64_t>(from),
                      static_cast<std::int64_t>(k)});
    }
  }

  void expand(std::size_t s) {
    const auto& p = problem_;
    const SearchStep cur = states_[s].step;
    std::vector<std::vector<std::size_t>> ends_b(p.n);
    std::vector<char> ends_b_ready(p.n, 0);
    auto b_ends_for = [&](std::size_t d) -> const std::vector<std::size_t>& {
      if (!ends_b_ready[d]) {
        ends_b[d] = next_ends(p.cover_b, d, cur.b_end);
        ends_b_ready[d] = 1;
      }
      return ends_b[d];
    };

    // Advance B' only.
    for (std::size_t d : p.partners[cur.i]) {
      if (d <= cur.j) continue;
      for (std::size_t eb : b_ends_for(d)) {
        extend(s, {cur.i, d, cur.a_end, eb}, Cost{}, p.weight_b[d]);
      }
    }
    for (std::size_t c = cur.i + 1; c < p.m; ++c) {
      if (p.partners[c].empty()) continue;
      const auto ends_a = next_ends(p.cover_a, c, cur.a_end);
      if (ends_a.empty()) continue;
      // Advance A' only.
      if (p.is_allowed(c, cur.j)) {
        for (std::size_t ea : ends_a) {
          extend(s, {c, cur.j, ea, cur.b_end}, p.weight_a[c], Cost{});
        }
      }
      // Advance both.
      for (std::size_t d : p.partners[c]) {
        if (d <= cur.j) continue;
        for (std::size_t ea : ends_a) {
          for (std::size_t eb : b_ends_for(d)) {
            extend(s, {c, d, ea, eb}, p.weight_a[c], p.weight_b[d]);
          }
        }
      }
    }
  }

  std::vector<SearchOutcome<Cost>> collect() const {
    const auto& p = problem_;
    struct Final {
      Cost a;
      Cost b;
      std::size_t state;
      std::size_t label;
    };
    std::vector<Final> front;
    for (const auto& [key, s] : index_) {
      const auto& st = states_[s];
      if (st.step.a_end + 1 != p.m || st.step.b_end + 1 != p.n) continue;
      for (std::size_t k = 0; k < st.labels.size(); ++k) {
        const auto& l = st.labels[k];
        const bool dominated = std::any_of(front.begin(), front.end(), [&](const Final& f) {
          return f.a <= l.a && f.b <= l.b;
        });
        if (dominated) continue;
        std::erase_if(front, [&](const Final& f) { return l.a <= f.a && l.b <= f.b; });
        front.push_back(Final{l.a, l.b, s, k});
      }
    }
    std::sort(front.begin(), front.end(), [](const Final& x, const Final& y) { return x.a < y.a; });

    std::vector<SearchOutcome<Cost>> outcomes;
    for (const auto& f : front) {
      SearchOutcome<Cost> outcome{f.a, f.b, {}};
      std::int64_t s = static_cast<std::int64_t>(f.state);
      std::int64_t k = static_cast<std::int64_t>(f.label);
      while (s >= 0) {
        const auto& st = states_[static_cast<std::size_t>(s)];
        outcome.steps.push_back(st.step);
        const auto& l = st.labels[static_cast<std::size_t>(k)];
        s = l.pred_state;
        k = l.pred_label;
      }
      std::reverse(outcome.steps.begin(), outcome.steps.end());
      outcomes.push_back(std::move(outcome));
    }
    return outcomes;
  }

  const SearchProblem<Cost>& problem_;
  std::size_t state_cap_;
  std::vector<State> states_;
  std::map<Key, std::size_t> index_;
};

}  // namespace chainpair::detail

#endif  // CHAINPAIR_DETAIL_SIMPLIFICATION_SEARCH_HPP
