#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manhattan/skyline.hpp"

namespace manhattan {

// SourceSide vertices are black-dominant columns (fed by a unit arc from the
// source), SinkSide vertices are white-dominant columns (drained by a unit
// arc into the sink).
enum class Role : uint8_t { SourceSide, SinkSide };

struct FlowVertex {
    int32_t col;
    Role role;

    friend bool operator==(const FlowVertex&, const FlowVertex&) = default;
};

// Flow network over the dominant columns of a skyline. Consecutive vertices
// are joined by a pair of opposite arcs, both of capacity ceil(X/2) where X
// is the minimum column height over the closed column interval between them.
// Capacity-zero gaps (a height-0 column lies strictly between the vertices)
// are kept so vertex indices stay aligned with the dominant ordering;
// solvers treat them as permanently saturated.
struct FlowNetwork {
    std::vector<FlowVertex> verts;  // ascending column order
    std::vector<uint32_t> caps;     // caps[i] joins verts[i] and verts[i+1]

    size_t vertex_count() const { return verts.size(); }
};

// Single left-to-right scan over the columns; auxiliary state is one running
// minimum, so the build is linear in the column count.
FlowNetwork build_network(const Skyline& sk);

// Debug dump: one line per vertex "col source|sink", then one line per gap
// capacity, in order.
std::string dump_network(const FlowNetwork& net);

// Sparse table answering the minimum height over a closed column interval.
// Used by tests and the certificate module; the network build does not need
// it.
class RangeMinIndex {
public:
    explicit RangeMinIndex(const Skyline& sk);

    // min over heights[i..j], endpoints included; throws
    // std::invalid_argument when i > j or j is out of range.
    uint32_t query(size_t i, size_t j) const;

    size_t size() const { return size_; }

private:
    std::vector<std::vector<uint32_t>> table_;
    size_t size_;
};

}  // namespace manhattan
