#include "manhattan/render.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "manhattan/errors.hpp"

namespace manhattan {

namespace {

void check_bound(const Skyline& sk, uint64_t cell_bound, const char* who) {
    const uint64_t cells = sk.cell_count();
    if (cells > cell_bound)
        throw ScaleError(std::string(who) + ": " + std::to_string(cells) +
                         " cells exceed the render bound of " + std::to_string(cell_bound));
}

}  // namespace

std::string render_ascii(const Skyline& sk, const Tiling* tiling, uint64_t cell_bound) {
    check_bound(sk, cell_bound, "render_ascii");
    const size_t cols = sk.heights.size();
    uint32_t max_h = 0;
    for (uint32_t h : sk.heights) max_h = std::max(max_h, h);

    std::vector<std::string> grid(max_h, std::string(cols, ' '));
    for (size_t c = 0; c < cols; ++c)
        for (uint32_t r = 0; r < sk.heights[c]; ++r) grid[r][c] = '!';
    if (tiling) {
        for (const Domino& d : tiling->dominoes) {
            const Cell a = d.anchor;
            const Cell b = d.second();
            if (!sk.contains(a) || !sk.contains(b)) continue;
            if (d.orient == Orient::Horizontal) {
                grid[a.row][a.col] = '<';
                grid[b.row][b.col] = '>';
            } else {
                grid[a.row][a.col] = '^';
                grid[b.row][b.col] = 'v';
            }
        }
    }

    std::ostringstream out;
    for (size_t r = max_h; r-- > 0;) {
        std::string row = grid[r];
        row.erase(row.find_last_not_of(' ') + 1);
        out << row << '\n';
    }
    out << std::string(std::max<size_t>(cols, 1), '-') << '\n';
    return out.str();
}

std::string render_svg(const Skyline& sk, const Tiling* tiling, const RenderStyle& style,
                       uint64_t cell_bound) {
    check_bound(sk, cell_bound, "render_svg");
    const uint32_t px = style.cell_px;
    const size_t cols = sk.heights.size();
    uint32_t max_h = 0;
    for (uint32_t h : sk.heights) max_h = std::max(max_h, h);
    const uint64_t width = std::max<uint64_t>(uint64_t{cols} * px, 1);
    const uint64_t height = std::max<uint64_t>(uint64_t{max_h} * px, 1);

    // row 0 sits at the bottom of the canvas
    auto ypx = [&](int32_t row, uint32_t span_rows) {
        return (uint64_t{max_h} - static_cast<uint32_t>(row) - span_rows) * px;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (size_t c = 0; c < cols; ++c) {
        for (uint32_t r = 0; r < sk.heights[c]; ++r) {
            const bool black = cell_color(static_cast<int32_t>(c), static_cast<int32_t>(r)) == Color::Black;
            out << "  <rect class=\"cell\" x=\"" << c * px << "\" y=\"" << ypx(static_cast<int32_t>(r), 1)
                << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\""
                << (black ? style.black_fill : style.white_fill) << "\"/>\n";
        }
    }
    if (tiling) {
        for (const Domino& d : tiling->dominoes) {
            const bool horizontal = d.orient == Orient::Horizontal;
            const uint32_t w_cells = horizontal ? 2 : 1;
            const uint32_t h_cells = horizontal ? 1 : 2;
            out << "  <rect class=\"domino\" x=\"" << d.anchor.col * px + 2 << "\" y=\""
                << ypx(d.anchor.row, h_cells) + 2 << "\" width=\"" << w_cells * px - 4 << "\" height=\""
                << h_cells * px - 4 << "\" fill=\"none\" stroke=\"" << style.domino_stroke
                << "\" stroke-width=\"2\"/>\n";
        }
        for (const Cell& c : tiling->uncovered) {
            out << "  <rect class=\"uncovered\" x=\"" << c.col * px + 2 << "\" y=\"" << ypx(c.row, 1) + 2
                << "\" width=\"" << px - 4 << "\" height=\"" << px - 4 << "\" fill=\""
                << style.uncovered_fill << "\" fill-opacity=\"0.8\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace manhattan
