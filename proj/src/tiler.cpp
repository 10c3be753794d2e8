#include "manhattan/tiler.hpp"

#include <algorithm>
#include <sstream>

#include "manhattan/errors.hpp"
#include "manhattan/solver_greedy.hpp"

namespace manhattan {

namespace {

[[noreturn]] void invariant_failure(const std::vector<uint32_t>& cur, int32_t p, int32_t q,
                                    const std::string& what) {
    std::ostringstream msg;
    msg << "planing pair (" << p << ", " << q << "): " << what << "; heights[" << p << ".." << q << "] =";
    for (int32_t k = p; k >= 0 && k <= q && static_cast<size_t>(k) < cur.size(); ++k) msg << ' ' << cur[k];
    throw TilerInvariantError(msg.str());
}

}  // namespace

uint32_t planing_level(const std::vector<uint32_t>& cur, int32_t p, int32_t q) {
    if (p < 0 || q >= static_cast<int32_t>(cur.size()) || p >= q)
        invariant_failure(cur, p, q, "column pair out of order or out of range");
    if ((q - p) % 2 == 0) invariant_failure(cur, p, q, "columns have equal index parity");
    if (cur[p] % 2 == 0 || cur[q] % 2 == 0) invariant_failure(cur, p, q, "endpoint height is even");
    uint32_t level = std::min(cur[p] - 1, cur[q] - 1);
    for (int32_t k = p + 1; k < q; ++k) {
        if (cur[k] % 2 == 1) invariant_failure(cur, p, q, "interior height is odd");
        if (cur[k] < 2) invariant_failure(cur, p, q, "interior height below 2");
        level = std::min(level, cur[k] - 2);
    }
    return level;
}

std::vector<Domino> tile_strip(const std::vector<uint32_t>& cur, int32_t p, int32_t q, uint32_t level) {
    if (level != planing_level(cur, p, q)) invariant_failure(cur, p, q, "level does not match the pair");
    std::vector<Domino> out;
    const auto a = static_cast<int32_t>(level);
    for (int32_t k = p; k < q; k += 2) out.push_back({{k, a}, Orient::Horizontal});
    for (int32_t k = p + 1; k < q - 1; k += 2) out.push_back({{k, a + 1}, Orient::Horizontal});
    auto stack_column = [&](int32_t c, uint32_t from) {
        for (uint32_t r = from; r + 1 < cur[c]; r += 2)
            out.push_back({{c, static_cast<int32_t>(r)}, Orient::Vertical});
    };
    stack_column(p, level + 1);
    for (int32_t k = p + 1; k < q; ++k) stack_column(k, level + 2);
    stack_column(q, level + 1);
    return out;
}

Tiling vertical_fill(const std::vector<uint32_t>& cur) {
    Tiling t;
    for (size_t c = 0; c < cur.size(); ++c) {
        const auto col = static_cast<int32_t>(c);
        for (uint32_t r = 0; r + 1 < cur[c]; r += 2)
            t.dominoes.push_back({{col, static_cast<int32_t>(r)}, Orient::Vertical});
        if (cur[c] % 2 == 1) t.uncovered.push_back({col, static_cast<int32_t>(cur[c] - 1)});
    }
    return t;
}

Tiling build_tiling(const Skyline& sk, std::vector<PlaningStep>* steps) {
    const FlowNetwork net = build_network(sk);
    const MatchPlan plan = greedy_stack(net);
    std::vector<uint32_t> cur = sk.heights;
    Tiling t;
    for (const auto& [vi, vj] : plan.pairs) {
        const int32_t p = net.verts[vi].col;
        const int32_t q = net.verts[vj].col;
        const uint32_t level = planing_level(cur, p, q);
        std::vector<Domino> strip = tile_strip(cur, p, q, level);
        if (steps) steps->push_back({p, q, level, strip});
        t.dominoes.insert(t.dominoes.end(), strip.begin(), strip.end());
        std::fill(cur.begin() + p, cur.begin() + q + 1, level);
    }
    Tiling fill = vertical_fill(cur);
    t.dominoes.insert(t.dominoes.end(), fill.dominoes.begin(), fill.dominoes.end());
    t.uncovered = std::move(fill.uncovered);
    return t;
}

ValidationReport validate_tiling(const Skyline& sk, const Tiling& t) {
    ValidationReport rep;
    auto note = [&](std::string v) { rep.violations.push_back(std::move(v)); };
    auto cell_str = [](Cell c) {
        return "(" + std::to_string(c.col) + ", " + std::to_string(c.row) + ")";
    };

    // flat occupancy indexed by column prefix sums
    std::vector<uint64_t> offset(sk.heights.size() + 1, 0);
    for (size_t c = 0; c < sk.heights.size(); ++c) offset[c + 1] = offset[c] + sk.heights[c];
    std::vector<uint8_t> covered(offset.back(), 0);
    auto flat = [&](Cell c) { return offset[static_cast<size_t>(c.col)] + static_cast<uint32_t>(c.row); };

    for (size_t i = 0; i < t.dominoes.size(); ++i) {
        const Domino& d = t.dominoes[i];
        for (Cell c : {d.anchor, d.second()}) {
            if (!sk.contains(c)) {
                note("domino " + std::to_string(i) + " covers " + cell_str(c) + " outside the polyomino");
                continue;
            }
            if (covered[flat(c)]) note("overlap at " + cell_str(c));
            covered[flat(c)] = 1;
        }
    }

    const uint64_t cells = sk.cell_count();
    if (2 * t.dominoes.size() + t.uncovered.size() != cells)
        note("cell identity broken: 2*" + std::to_string(t.dominoes.size()) + " + " +
             std::to_string(t.uncovered.size()) + " != " + std::to_string(cells));

    std::vector<uint8_t> listed(offset.back(), 0);
    for (Cell c : t.uncovered) {
        if (!sk.contains(c)) {
            note("uncovered cell " + cell_str(c) + " outside the polyomino");
            continue;
        }
        if (covered[flat(c)]) note("uncovered cell " + cell_str(c) + " is covered by a domino");
        if (listed[flat(c)]) note("uncovered cell " + cell_str(c) + " listed twice");
        listed[flat(c)] = 1;
    }
    for (size_t c = 0; c < sk.heights.size(); ++c) {
        for (uint32_t r = 0; r < sk.heights[c]; ++r) {
            const uint64_t id = offset[c] + r;
            if (!covered[id] && !listed[id])
                note("cell (" + std::to_string(c) + ", " + std::to_string(r) +
                     ") neither covered nor listed uncovered");
        }
    }
    return rep;
}

}  // namespace manhattan
