#ifndef CHAINPAIR_FREESPACE_HPP
#define CHAINPAIR_FREESPACE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "chainpair/geometry.hpp"
#include "chainpair/pareto.hpp"

namespace chainpair {

/// 1-based (i into A, j into B).
struct IndexPair {
  std::size_t i = 1;
  std::size_t j = 1;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// Vertex pairs within the cross distance, sorted by (i, j).
using PairSet = std::vector<IndexPair>;

/// Rectangle grown around a close pair: the delta-runs of both vertices.
struct Rect {
  IndexPair pair;
  IndexInterval a;
  IndexInterval b;
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct FreeSpaceDiagram {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rect> rects;

  /// Index into rects of the rectangle for pair p, or rects.size().
  std::size_t find(const IndexPair& p) const;
};

/// Throws std::invalid_argument when rects repeat a pair, leave the grid or
/// do not contain their own pair.
void validate(const FreeSpaceDiagram& diagram);

/// A monotone chain of rectangles plus one tiling of both chains.
///
/// a_cover[t] is the block of A rows represented by the t-th distinct kept
/// A vertex; the blocks partition [1, m] in order. Same for b_cover.
struct RectPath {
  std::vector<std::size_t> rects;  // indices into FreeSpaceDiagram::rects
  std::vector<IndexInterval> a_cover;
  std::vector<IndexInterval> b_cover;

  std::vector<IndexPair> pairs(const FreeSpaceDiagram& diagram) const;
  /// (distinct kept A vertices, distinct kept B vertices).
  ParetoPoint<int> counts() const {
    return {static_cast<int>(a_cover.size()), static_cast<int>(b_cover.size())};
  }
};

struct PathEnumeration {
  std::vector<RectPath> paths;
  /// More than `limit` distinct pair sequences exist; `paths` holds the first `limit`.
  bool limit_exceeded = false;
};

PairSet close_pairs(const Chain3d& a, const Chain3d& b, double delta3);

FreeSpaceDiagram build_diagram(const Chain3d& a, const Chain3d& b, double delta1, double delta2,
                               double delta3);

/// Non-dominated (kept A, kept B) counts over every feasible rectangle path.
ParetoSet pareto_paths(const FreeSpaceDiagram& diagram);

/// Feasible rectangle paths, one per distinct pair sequence, in
/// lexicographic order of the sequences.
PathEnumeration enumerate_paths(const FreeSpaceDiagram& diagram, std::size_t limit);

/// Header "i,j,aLo,aHi,bLo,bHi" followed by one line per rectangle.
void write_csv(std::ostream& os, const FreeSpaceDiagram& diagram);

/// Grid of unit cells with A along x and B along y, origin top-left;
/// rectangles as translucent fills, close pairs as dots, optional paths as
/// polylines through their pairs.
void write_svg(std::ostream& os, const FreeSpaceDiagram& diagram,
               const std::vector<RectPath>& highlight = {});

}  // namespace chainpair

#endif  // CHAINPAIR_FREESPACE_HPP
