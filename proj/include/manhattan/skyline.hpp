#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace manhattan {

// A unit square of the grid. Column 0 is the left edge, row 0 sits on the
// base line.
struct Cell {
    int32_t col = 0;
    int32_t row = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Color : uint8_t { Black, White };

// Checkerboard coloring: a cell is black when col+row is even. Edge-adjacent
// cells always get opposite colors.
inline Color cell_color(int32_t col, int32_t row) {
    return ((col + row) & 1) == 0 ? Color::Black : Color::White;
}

// Manhattan polyomino: columns of unit squares standing on a common base
// line, stored as the sequence of column heights (left to right).
// Zero heights are legal and encode gaps between disconnected parts;
// trailing zero columns are ignored for equality.
struct Skyline {
    std::vector<uint32_t> heights;

    Skyline() = default;
    explicit Skyline(std::vector<uint32_t> h) : heights(std::move(h)) {}
    Skyline(std::initializer_list<uint32_t> h) : heights(h) {}

    size_t column_count() const { return heights.size(); }
    uint64_t cell_count() const;
    bool contains(Cell c) const;

    friend bool operator==(const Skyline& a, const Skyline& b);
};

// Column indices of odd-height columns, split by majority color. A column of
// odd height has one cell more of the color of its bottom cell, so
// black-dominant columns sit at even indices and white-dominant ones at odd
// indices. s_order is the ascending merge of both sets; consecutive entries
// have only even-height columns between them.
struct DominantInfo {
    std::vector<int32_t> blacks;
    std::vector<int32_t> whites;
    std::vector<int32_t> s_order;
};

struct ColorCounts {
    uint64_t black = 0;
    uint64_t white = 0;
};

// Number of black cells in a column of the given height at the given index.
inline uint64_t column_black_count(size_t col, uint32_t height) {
    return (col % 2 == 0) ? (uint64_t(height) / 2 + height % 2) : uint64_t(height) / 2;
}

ColorCounts color_counts(const Skyline& sk);

DominantInfo dominant_columns(const Skyline& sk);

// black count minus white count; zero means balanced.
int64_t imbalance(const Skyline& sk);

// Appends isolated height-1 columns of the lacking color, each separated by
// a zero-height column, until black and white counts agree. The input is a
// prefix of the result. Isolated odd columns join no transversal path, so
// the placement does not affect flow values or deficiencies downstream.
Skyline balance(const Skyline& sk);

// Pointwise height comparison after zero-padding the shorter sequence.
bool is_included(const Skyline& p, const Skyline& q);

}  // namespace manhattan
