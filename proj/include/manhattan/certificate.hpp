#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "manhattan/flownet.hpp"
#include "manhattan/solver_greedy.hpp"
#include "manhattan/solver_reference.hpp"

namespace manhattan {

enum class CutArcKind : uint8_t { Source, Transversal, Sink };

// An arc leaving the source side of the minimal cut. Transversal arcs record
// both column endpoints in arc direction; unit arcs record the vertex column
// in both fields.
struct CutEdge {
    CutArcKind kind;
    int32_t tail_col;
    int32_t head_col;
    int32_t gap;  // gap index for transversal arcs, -1 for unit arcs
    uint32_t capacity;
};

struct CutSet {
    std::vector<CutEdge> edges;
    uint64_t capacity = 0;  // sum over crossing arcs; equals the max-flow value
};

// Hall witness for the deficiency of a balanced skyline: bottleneck columns
// of the transversal cut arcs delimit zones whose majority-color cells form
// the witness set H with 2(|H| - |Gamma(H)|) equal to the deficiency.
struct DeficiencyCertificate {
    std::vector<int32_t> bottlenecks_raw;
    std::vector<int32_t> bottlenecks_adj;
    std::vector<std::pair<int32_t, int32_t>> zones;  // inclusive column ranges
    uint64_t witness_black = 0;                      // |H|
    uint64_t witness_nbhd = 0;                       // |Gamma(H)|
    bool colors_inverted = false;
    std::vector<std::string> warnings;
};

// Source-side residual-reachability cut for a maximum flow. Throws
// std::invalid_argument when the flow value is not maximum. Capacity-zero
// crossing arcs are reported (they shape the bottleneck list) but add
// nothing to the cut capacity.
CutSet min_cut(const FlowNetwork& net, const ArcFlow& flow);

// For each transversal crossing arc, the smallest column of its gap interval
// attaining the interval minimum height; ascending, duplicates removed.
// Unit crossing arcs contribute no bottleneck.
std::vector<int32_t> bottlenecks(const Skyline& sk, const CutSet& cut);

// Builds the witness zones: the crossing gaps' bottleneck columns split the
// column axis into segments that alternate between the residual-reachable
// side of the cut and its complement; the zones are the reachable segments.
// A boundary column joins its zone unless it is white-dominant, in which
// case the boundary retreats one column out of the zone. H counts the
// majority-color cells of the zones, Gamma(H) their neighbors on the
// adjacency graph. inverted swaps the two colors throughout. Throws
// std::invalid_argument on unbalanced input.
DeficiencyCertificate build_witness(const Skyline& sk, const CutSet& cut, bool inverted = false);

// Full pipeline with automatic color inversion when the least transversal
// crossing arc leaves a white-dominant column.
struct CertificateBundle {
    DeficiencyCertificate cert;
    CutSet cut;
    uint64_t flow_value = 0;
};

CertificateBundle make_certificate(const Skyline& sk);

// (a) 2(|H| - |Gamma(H)|) equals the deficiency computed from the flow and
// (b) the matching oracle respects the Hall bound. Throws on unbalanced
// input.
bool verify_certificate(const Skyline& sk, const DeficiencyCertificate& cert,
                        uint64_t cell_bound = kDefaultOracleCellBound);

}  // namespace manhattan
