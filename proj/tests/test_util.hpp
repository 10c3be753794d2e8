#pragma once

// Shared helpers for the unit and acceptance suites: seeded instance
// generators and brute-force oracles kept independent of the library's fast
// paths.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "manhattan/flownet.hpp"
#include "manhattan/skyline.hpp"
#include "manhattan/solver_greedy.hpp"

namespace testutil {

inline manhattan::Skyline random_skyline(std::mt19937_64& rng, uint32_t max_cols, uint32_t max_h) {
    const uint32_t cols = max_cols > 0 ? 1 + static_cast<uint32_t>(rng() % max_cols) : 0;
    std::vector<uint32_t> h(cols);
    for (auto& x : h) x = static_cast<uint32_t>(rng() % (uint64_t{max_h} + 1));
    return manhattan::Skyline(std::move(h));
}

// Color counting by enumerating every cell, no column arithmetic.
inline manhattan::ColorCounts brute_color_counts(const manhattan::Skyline& sk) {
    manhattan::ColorCounts cc;
    for (size_t c = 0; c < sk.heights.size(); ++c)
        for (uint32_t r = 0; r < sk.heights[c]; ++r)
            (manhattan::cell_color(static_cast<int32_t>(c), static_cast<int32_t>(r)) ==
                     manhattan::Color::Black
                 ? cc.black
                 : cc.white)++;
    return cc;
}

inline uint32_t brute_range_min(const manhattan::Skyline& sk, size_t i, size_t j) {
    uint32_t m = sk.heights[i];
    for (size_t k = i; k <= j; ++k) m = std::min(m, sk.heights[k]);
    return m;
}

// Capacity bounds plus unit conservation at every vertex: the unit arc in
// equals the net transversal out.
inline bool flow_is_feasible(const manhattan::FlowNetwork& net, const manhattan::ArcFlow& f,
                             std::string* why = nullptr) {
    using namespace manhattan;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const size_t n = net.verts.size();
    for (size_t g = 0; g + 1 < n; ++g)
        if (f.lr[g] > net.caps[g] || f.rl[g] > net.caps[g])
            return fail("capacity exceeded on gap " + std::to_string(g));
    for (size_t v = 0; v < n; ++v) {
        const int64_t from_left = v > 0 ? static_cast<int64_t>(f.lr[v - 1]) : 0;
        const int64_t from_right = v + 1 < n ? static_cast<int64_t>(f.rl[v]) : 0;
        const int64_t to_right = v + 1 < n ? static_cast<int64_t>(f.lr[v]) : 0;
        const int64_t to_left = v > 0 ? static_cast<int64_t>(f.rl[v - 1]) : 0;
        const int64_t unit = f.unit_used[v];
        const bool source_side = net.verts[v].role == Role::SourceSide;
        const int64_t in = from_left + from_right + (source_side ? unit : 0);
        const int64_t out = to_right + to_left + (source_side ? 0 : unit);
        if (in != out) return fail("conservation broken at vertex " + std::to_string(v));
    }
    return true;
}

// Non-crossing pairs, opposite roles, no vertex reused, interiors matched
// before their enclosing pair.
inline bool plan_is_structural(const manhattan::FlowNetwork& net, const manhattan::MatchPlan& plan,
                               std::string* why = nullptr) {
    using namespace manhattan;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (plan.value != plan.pairs.size()) return fail("value != pair count");
    std::vector<int64_t> matched_at(net.verts.size(), -1);
    for (size_t t = 0; t < plan.pairs.size(); ++t) {
        const auto [i, j] = plan.pairs[t];
        if (i < 0 || j <= i || static_cast<size_t>(j) >= net.verts.size())
            return fail("pair indices out of range");
        if (net.verts[i].role == net.verts[j].role) return fail("pair with equal roles");
        if (matched_at[i] >= 0 || matched_at[j] >= 0) return fail("vertex matched twice");
        for (int32_t k = i + 1; k < j; ++k)
            if (matched_at[k] < 0) return fail("interior vertex unmatched at match time");
        matched_at[i] = matched_at[j] = static_cast<int64_t>(t);
    }
    for (size_t a = 0; a < plan.pairs.size(); ++a) {
        for (size_t b = a + 1; b < plan.pairs.size(); ++b) {
            const auto [i1, j1] = plan.pairs[a];
            const auto [i2, j2] = plan.pairs[b];
            const bool disjoint = j1 < i2 || j2 < i1;
            const bool nested = (i1 < i2 && j2 < j1) || (i2 < i1 && j1 < j2);
            if (!disjoint && !nested) return fail("crossing pairs");
        }
    }
    return true;
}

}  // namespace testutil
