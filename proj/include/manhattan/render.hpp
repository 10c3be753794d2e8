#pragma once

#include <cstdint>
#include <string>

#include "manhattan/skyline.hpp"
#include "manhattan/tiler.hpp"

namespace manhattan {

inline constexpr uint64_t kDefaultRenderCellBound = 100'000;

struct RenderStyle {
    uint32_t cell_px = 24;
    std::string black_fill = "#aab4c0";
    std::string white_fill = "#eef1f4";
    std::string domino_stroke = "#1f2933";
    std::string uncovered_fill = "#e4572e";
};

// Row-by-row glyph grid, top row first, with a dashed base line. Cells of
// the polyomino start out as '!' (uncovered); domino halves overwrite them
// with '<'/'>' (horizontal) or '^'/'v' pointing at the partner cell
// (vertical). Throws ScaleError above the cell bound.
std::string render_ascii(const Skyline& sk, const Tiling* tiling = nullptr,
                         uint64_t cell_bound = kDefaultRenderCellBound);

// Checkerboard-shaded cells, outlined domino rectangles, uncovered cells
// highlighted; row 0 is drawn at the bottom. Throws ScaleError above the
// cell bound.
std::string render_svg(const Skyline& sk, const Tiling* tiling = nullptr,
                       const RenderStyle& style = {}, uint64_t cell_bound = kDefaultRenderCellBound);

}  // namespace manhattan
