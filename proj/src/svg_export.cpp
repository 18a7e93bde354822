#include <iterator>
#include <ostream>

#include "chainpair/freespace.hpp"

namespace chainpair {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 28;

// Top-left corner of grid cell (i, j), 1-based.
int cell_x(std::size_t i) { return kMargin + static_cast<int>(i - 1) * kCell; }
int cell_y(std::size_t j) { return kMargin + static_cast<int>(j - 1) * kCell; }

const char* const kPathColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

void write_svg(std::ostream& os, const FreeSpaceDiagram& d, const std::vector<RectPath>& highlight) {
  const int width = 2 * kMargin + static_cast<int>(d.m) * kCell;
  const int height = 2 * kMargin + static_cast<int>(d.n) * kCell;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  os << "<g id=\"grid\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (std::size_t i = 1; i <= d.m; ++i) {
    for (std::size_t j = 1; j <= d.n; ++j) {
      os << "<rect class=\"cell\" x=\"" << cell_x(i) << "\" y=\"" << cell_y(j) << "\" width=\""
         << kCell << "\" height=\"" << kCell << "\"/>\n";
    }
  }
  os << "</g>\n";

  os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (std::size_t i = 1; i <= d.m; ++i) {
    os << "<text x=\"" << cell_x(i) + kCell / 2 << "\" y=\"" << kMargin - 8 << "\">a" << i
       << "</text>\n";
  }
  for (std::size_t j = 1; j <= d.n; ++j) {
    os << "<text x=\"" << kMargin / 2 << "\" y=\"" << cell_y(j) + kCell / 2 + 4 << "\">b" << j
       << "</text>\n";
  }
  os << "</g>\n";

  os << "<g id=\"rects\" fill=\"#4c72b0\" fill-opacity=\"0.22\" stroke=\"#4c72b0\">\n";
  for (const auto& r : d.rects) {
    os << "<rect data-pair=\"" << r.pair.i << ',' << r.pair.j << "\" x=\"" << cell_x(r.a.lo)
       << "\" y=\"" << cell_y(r.b.lo) << "\" width=\"" << static_cast<int>(r.a.size()) * kCell
       << "\" height=\"" << static_cast<int>(r.b.size()) * kCell << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"pairs\" fill=\"#222222\">\n";
  for (const auto& r : d.rects) {
    os << "<circle cx=\"" << cell_x(r.pair.i) + kCell / 2 << "\" cy=\"" << cell_y(r.pair.j) + kCell / 2
       << "\" r=\"4\"/>\n";
  }
  os << "</g>\n";

  if (!highlight.empty()) {
    os << "<g id=\"paths\" fill=\"none\" stroke-width=\"2\">\n";
    for (std::size_t k = 0; k < highlight.size(); ++k) {
      os << "<polyline stroke=\"" << kPathColors[k % std::size(kPathColors)] << "\" points=\"";
      bool first = true;
      for (const auto& p : highlight[k].pairs(d)) {
        os << (first ? "" : " ") << cell_x(p.i) + kCell / 2 << ',' << cell_y(p.j) + kCell / 2;
        first = false;
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

}  // namespace chainpair
