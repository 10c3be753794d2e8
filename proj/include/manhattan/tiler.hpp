#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manhattan/skyline.hpp"

namespace manhattan {

enum class Orient : uint8_t { Horizontal, Vertical };

// A 1x2 block anchored at its left (horizontal) or bottom (vertical) cell.
struct Domino {
    Cell anchor;
    Orient orient;

    Cell second() const {
        return orient == Orient::Horizontal ? Cell{anchor.col + 1, anchor.row}
                                            : Cell{anchor.col, anchor.row + 1};
    }

    friend bool operator==(const Domino&, const Domino&) = default;
};

struct Tiling {
    std::vector<Domino> dominoes;
    std::vector<Cell> uncovered;
};

// One application of the leveling transformation: the columns from left_col
// to right_col were cut down to the (even) level, and emitted covers the
// removed strip exactly.
struct PlaningStep {
    int32_t left_col;
    int32_t right_col;
    uint32_t level;
    std::vector<Domino> emitted;
};

// Level to cut a matched column pair down to: one square below the smaller
// endpoint and two below the smallest column strictly between them. Even and
// non-negative by the preconditions (odd endpoints, even interiors >= 2);
// violations throw TilerInvariantError.
uint32_t planing_level(const std::vector<uint32_t>& cur, int32_t p, int32_t q);

// Dominoes covering the strip {(k, r) : p <= k <= q, level <= r < cur[k]}:
// one horizontal run along the level row, one along the next row across the
// interior columns, vertical stacks above. All counts are integral by the
// parity preconditions.
std::vector<Domino> tile_strip(const std::vector<uint32_t>& cur, int32_t p, int32_t q, uint32_t level);

// Per column: stacked vertical dominoes from the base line; odd columns
// leave their top cell uncovered.
Tiling vertical_fill(const std::vector<uint32_t>& cur);

// Full pipeline: solve the flow network, plane the matched pairs in match
// order (innermost first by the non-crossing property), then fill the
// leveled residue vertically. The uncovered count equals deficiency(sk).
// If steps is non-null it receives one record per planing.
Tiling build_tiling(const Skyline& sk, std::vector<PlaningStep>* steps = nullptr);

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Checks containment, pairwise disjointness, the cell-count identity
// 2*|dominoes| + |uncovered| = cells, and that the uncovered list is exactly
// the set of cells covered by no domino. Violations become report entries.
ValidationReport validate_tiling(const Skyline& sk, const Tiling& t);

}  // namespace manhattan
