#pragma once

// Text and SVG pictures of the region B_w: filled cells, a marked origin,
// and the n points a^i - e_i/2.

#include <cstdint>
#include <string>

#include "hss/word.hpp"

namespace hss {

/// Character grid at half-cell resolution (n = 2 only). '#' is a cell of B,
/// '@' the origin, '*' one of the points a^i - e_i/2, '.' an empty cell.
std::string render_b_ascii(const Word& w, std::int64_t truncation = 3);

/// SVG with 24-unit cells (n = 2, or n = 3 drawn as one panel per layer x3 = k).
std::string render_b_svg(const Word& w, std::int64_t truncation = 3);

}  // namespace hss
