#include "hss/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "hss/error.hpp"

namespace hss {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 12;
constexpr const char* kCellFill = "#9ecae1";
constexpr const char* kCellStroke = "#3182bd";
constexpr const char* kOriginFill = "#08306b";
constexpr const char* kMarkFill = "#d62728";
constexpr const char* kTextFill = "#333333";

/// Everything the two renderers need, with marks in doubled coordinates.
struct Picture {
  std::set<IVec> cells;
  std::vector<IVec> marks;
};

Picture picture(const Word& w, std::int64_t truncation) {
  require_admissible(w);
  if (truncation < 0) throw ValidationError("truncation must be nonnegative");
  Picture pic;
  pic.cells = b_region(w, truncation);
  const auto data = differential_data(w);
  const auto n = static_cast<std::size_t>(w.n());
  for (std::size_t i = 0; i < n; ++i) pic.marks.push_back(scaled(data.a[i], 2) - unit_vector(n, i));
  return pic;
}

/// Bounds of cells and marks in doubled coordinates for the first two axes.
void doubled_bounds(const Picture& pic, std::int64_t& x0, std::int64_t& x1, std::int64_t& y0, std::int64_t& y1) {
  x0 = y0 = 0;
  x1 = y1 = 0;
  auto take = [&](std::int64_t x, std::int64_t y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& c : pic.cells) take(2 * c[0], 2 * c[1]);
  for (const auto& m : pic.marks) take(m[0], m[1]);
}

}  // namespace

std::string render_b_ascii(const Word& w, std::int64_t truncation) {
  if (w.n() != 2) throw UserError("ascii rendering supports n=2 only (got n=" + std::to_string(w.n()) + ")");
  const Picture pic = picture(w, truncation);
  std::int64_t x0, x1, y0, y1;
  doubled_bounds(pic, x0, x1, y0, y1);
  std::set<IVec> marks(pic.marks.begin(), pic.marks.end());

  std::string out;
  for (std::int64_t y = y1 + 1; y >= y0 - 1; --y) {
    std::string line;
    for (std::int64_t x = x0 - 1; x <= x1 + 1; ++x) {
      char ch = ' ';
      if (marks.count({x, y})) {
        ch = '*';
      } else if (x % 2 == 0 && y % 2 == 0) {
        const IVec cell{x / 2, y / 2};
        if (pic.cells.count(cell)) ch = (x == 0 && y == 0) ? '@' : '#';
        else ch = '.';
      }
      line += ch;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_b_svg(const Word& w, std::int64_t truncation) {
  if (w.n() != 2 && w.n() != 3) {
    throw UserError("svg rendering supports n=2 or n=3 only (got n=" + std::to_string(w.n()) + ")");
  }
  const Picture pic = picture(w, truncation);
  std::int64_t x0, x1, y0, y1;
  doubled_bounds(pic, x0, x1, y0, y1);
  --x0, --y0, ++x1, ++y1;

  // One panel per layer; n = 2 is a single layer 0.
  std::map<std::int64_t, std::vector<IVec>> layers;
  if (w.n() == 2) {
    layers[0];
  } else {
    for (const auto& c : pic.cells) layers[c[2]];
    // A mark at height c/2 appears in the layers floor(c/2) and ceil(c/2).
    for (const auto& m : pic.marks) {
      const std::int64_t below = m[2] >= 0 ? m[2] / 2 : -((1 - m[2]) / 2);
      layers[below];
      layers[below + (m[2] % 2 != 0 ? 1 : 0)];
    }
  }
  for (const auto& c : pic.cells) layers[w.n() == 2 ? 0 : c[2]].push_back(c);

  const std::int64_t panel_w = (x1 - x0) * kCell / 2;
  const std::int64_t panel_h = (y1 - y0) * kCell / 2;
  const std::int64_t label_h = w.n() == 3 ? 16 : 0;
  const auto count = static_cast<std::int64_t>(layers.size());
  const std::int64_t width = count * (panel_w + kMargin) + kMargin;
  const std::int64_t height = panel_h + label_h + 2 * kMargin;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<title>B_" << (w.empty() ? std::string("eps") : w.to_string()) << "</title>\n";

  std::int64_t panel = 0;
  for (const auto& [layer, cells] : layers) {
    const std::int64_t ox = kMargin + panel * (panel_w + kMargin);
    const std::int64_t oy = kMargin + label_h;
    // Doubled coordinate (X, Y) maps to the screen point of a cell center.
    auto sx = [&](std::int64_t X) { return ox + (X - x0) * kCell / 2; };
    auto sy = [&](std::int64_t Y) { return oy + (y1 - Y) * kCell / 2; };
    svg << "<g id=\"layer" << layer << "\">\n";
    if (w.n() == 3) {
      svg << "<text x=\"" << ox << "\" y=\"" << (kMargin + 12) << "\" font-family=\"monospace\" font-size=\"12\" fill=\""
          << kTextFill << "\">x3 = " << layer << "</text>\n";
    }
    svg << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << panel_w << "\" height=\"" << panel_h
        << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (const auto& c : cells) {
      const bool origin = std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; });
      svg << "<rect x=\"" << sx(2 * c[0]) - kCell / 2 << "\" y=\"" << sy(2 * c[1]) - kCell / 2 << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << (origin ? kOriginFill : kCellFill) << "\" stroke=\""
          << kCellStroke << "\"/>\n";
    }
    for (const auto& m : pic.marks) {
      if (w.n() == 3 && std::abs(m[2] - 2 * layer) > 1) continue;
      svg << "<circle cx=\"" << sx(m[0]) << "\" cy=\"" << sy(m[1]) << "\" r=\"4\" fill=\"" << kMarkFill << "\"/>\n";
    }
    svg << "</g>\n";
    ++panel;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hss
