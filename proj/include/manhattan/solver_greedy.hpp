#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "manhattan/flownet.hpp"

namespace manhattan {

// Explicit directional flow state on a network. Each gap carries independent
// left-to-right and right-to-left units, both bounded by the gap capacity;
// each vertex has a unit arc toward the source or the sink.
struct ArcFlow {
    std::vector<uint32_t> lr;        // left-to-right units per gap
    std::vector<uint32_t> rl;        // right-to-left units per gap
    std::vector<uint8_t> unit_used;  // source/sink arc saturation per vertex

    static ArcFlow zero(const FlowNetwork& net);
};

// Result of a solver run. pairs holds (left, right) vertex indices in match
// order; matched pairs are non-crossing and every vertex strictly inside a
// pair was matched earlier. arc_flow is filled by greedy_naive only.
struct MatchPlan {
    uint64_t value = 0;
    std::vector<std::pair<int32_t, int32_t>> pairs;
    ArcFlow arc_flow;
};

// Lexicographically first tractable pair (i, j), i < j, if any: the roles of
// i and j differ, neither unit arc is saturated, every gap between them has
// spare capacity in the direction dictated by the role of i, and every
// strictly interior vertex already has its unit arc saturated.
std::optional<std::pair<int32_t, int32_t>> find_tractable(const FlowNetwork& net, const ArcFlow& st);

// Reference solver: starts from the zero flow and repeatedly augments one
// unit along the path through the first tractable pair. Polynomial; kept
// simple for cross-checking.
MatchPlan greedy_naive(const FlowNetwork& net);

// Single left-to-right pass over the vertices with a stack of unmatched
// vertices and per-segment directional residuals; linear in the vertex count
// with constant state per stack entry.
MatchPlan greedy_stack(const FlowNetwork& net);

// Replays a match plan into explicit directional flows (one unit per pair
// along its span, direction given by the left partner's role).
ArcFlow arc_flow_from_pairs(const FlowNetwork& net, const MatchPlan& plan);

// |blacks| + |whites| - 2 * max flow: the number of uncovered cells in an
// optimal partial domino tiling.
uint64_t deficiency(const Skyline& sk);

}  // namespace manhattan
