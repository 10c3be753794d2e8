#pragma once

#include <cstdint>
#include <vector>

#include "manhattan/flownet.hpp"
#include "manhattan/skyline.hpp"

namespace manhattan {

inline constexpr uint64_t kDefaultOracleCellBound = 1'000'000;

// Unit-square adjacency graph of a skyline, bipartitioned by cell color.
// Every edge joins a black and a white cell; degrees never exceed 4.
struct GridGraph {
    std::vector<Cell> black_cells;
    std::vector<Cell> white_cells;
    std::vector<std::vector<int32_t>> black_adj;  // black id -> white ids
    std::vector<std::vector<int32_t>> white_adj;  // white id -> black ids
    uint64_t edge_count = 0;

    uint64_t cell_count() const { return black_cells.size() + white_cells.size(); }
};

// Exact maximum flow of the network (unit source/sink arcs plus both
// transversal directions), via shortest augmenting paths. Oracle for the
// greedy solvers.
uint64_t max_flow_reference(const FlowNetwork& net);

// Cells adjacent iff they share a unit edge inside the polyomino. Throws
// ScaleError above the cell bound.
GridGraph grid_graph(const Skyline& sk, uint64_t cell_bound = kDefaultOracleCellBound);

// Maximum matching size by repeated augmenting search (greedy seed first).
uint64_t max_matching(const GridGraph& g);

// Uncovered cells of an optimal partial tiling, straight from the matching:
// cell count - 2 * maximum matching.
uint64_t d_oracle(const Skyline& sk, uint64_t cell_bound = kDefaultOracleCellBound);

}  // namespace manhattan
