#include "manhattan/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace manhattan {

namespace {

uint64_t flow_value_of(const FlowNetwork& net, const ArcFlow& flow) {
    uint64_t v = 0;
    for (size_t i = 0; i < net.verts.size(); ++i)
        if (net.verts[i].role == Role::SourceSide) v += flow.unit_used[i];
    return v;
}

bool white_dominant_under(const Skyline& sk, int32_t col, bool inverted) {
    if (col < 0 || static_cast<size_t>(col) >= sk.heights.size()) return false;
    if (sk.heights[col] % 2 == 0) return false;
    return (col % 2 == 1) != inverted;
}

FlowNetwork flip_roles(FlowNetwork net) {
    for (FlowVertex& v : net.verts)
        v.role = v.role == Role::SourceSide ? Role::SinkSide : Role::SourceSide;
    return net;
}

}  // namespace

CutSet min_cut(const FlowNetwork& net, const ArcFlow& flow) {
    if (flow_value_of(net, flow) != max_flow_reference(net))
        throw std::invalid_argument("min_cut: flow is not maximum");

    const int n = static_cast<int>(net.verts.size());
    std::vector<uint8_t> reach(n, 0);
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
        if (net.verts[i].role == Role::SourceSide && !flow.unit_used[i]) {
            reach[i] = 1;
            queue.push_back(i);
        }
    }
    // Residual moves between neighbors: forward spare capacity of the arc in
    // that direction, or cancellation of flow on the opposite arc.
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        if (u + 1 < n && !reach[u + 1] && (flow.lr[u] < net.caps[u] || flow.rl[u] > 0)) {
            reach[u + 1] = 1;
            queue.push_back(u + 1);
        }
        if (u > 0 && !reach[u - 1] && (flow.rl[u - 1] < net.caps[u - 1] || flow.lr[u - 1] > 0)) {
            reach[u - 1] = 1;
            queue.push_back(u - 1);
        }
    }

    CutSet cut;
    for (int i = 0; i < n; ++i) {
        if (net.verts[i].role == Role::SourceSide && !reach[i]) {
            cut.edges.push_back({CutArcKind::Source, net.verts[i].col, net.verts[i].col, -1, 1});
            cut.capacity += 1;
        } else if (net.verts[i].role == Role::SinkSide && reach[i]) {
            cut.edges.push_back({CutArcKind::Sink, net.verts[i].col, net.verts[i].col, -1, 1});
            cut.capacity += 1;
        }
    }
    for (int g = 0; g + 1 < n; ++g) {
        if (reach[g] && !reach[g + 1]) {
            cut.edges.push_back(
                {CutArcKind::Transversal, net.verts[g].col, net.verts[g + 1].col, g, net.caps[g]});
            cut.capacity += net.caps[g];
        } else if (!reach[g] && reach[g + 1]) {
            cut.edges.push_back(
                {CutArcKind::Transversal, net.verts[g + 1].col, net.verts[g].col, g, net.caps[g]});
            cut.capacity += net.caps[g];
        }
    }
    return cut;
}

std::vector<int32_t> bottlenecks(const Skyline& sk, const CutSet& cut) {
    std::vector<int32_t> out;
    if (sk.heights.empty()) return out;
    const RangeMinIndex rmi(sk);
    for (const CutEdge& e : cut.edges) {
        if (e.kind != CutArcKind::Transversal) continue;
        const auto lo = static_cast<size_t>(std::min(e.tail_col, e.head_col));
        const auto hi = static_cast<size_t>(std::max(e.tail_col, e.head_col));
        const uint32_t min_h = rmi.query(lo, hi);
        for (size_t k = lo; k <= hi; ++k) {
            if (sk.heights[k] == min_h) {
                out.push_back(static_cast<int32_t>(k));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DeficiencyCertificate build_witness(const Skyline& sk, const CutSet& cut, bool inverted) {
    if (imbalance(sk) != 0) throw std::invalid_argument("build_witness: skyline is not balanced");

    DeficiencyCertificate cert;
    cert.colors_inverted = inverted;
    cert.bottlenecks_raw = bottlenecks(sk, cut);
    const auto cols = static_cast<int32_t>(sk.heights.size());

    // Transversal crossing arcs in gap order; the tail of each sits on the
    // reachable side, so the arc's direction says which side of its
    // bottleneck belongs to the zones.
    std::vector<CutEdge> arcs;
    for (const CutEdge& e : cut.edges)
        if (e.kind == CutArcKind::Transversal) arcs.push_back(e);
    std::sort(arcs.begin(), arcs.end(), [](const CutEdge& a, const CutEdge& b) { return a.gap < b.gap; });

    const RangeMinIndex rmi(sk);
    auto bottleneck_of = [&](const CutEdge& e) {
        const auto lo = static_cast<size_t>(std::min(e.tail_col, e.head_col));
        const auto hi = static_cast<size_t>(std::max(e.tail_col, e.head_col));
        const uint32_t min_h = rmi.query(lo, hi);
        for (size_t k = lo; k <= hi; ++k)
            if (sk.heights[k] == min_h) return static_cast<int32_t>(k);
        return static_cast<int32_t>(lo);  // unreachable
    };

    if (arcs.empty()) {
        // Reachability is uniform over all vertices. With reachable (or no)
        // vertices the zones cover everything; with saturated sources only,
        // nothing is reachable and the witness is empty.
        bool any_reachable = true;
        for (const CutEdge& e : cut.edges)
            if (e.kind == CutArcKind::Source) any_reachable = false;
        if (any_reachable && cols > 0) cert.zones.emplace_back(0, cols - 1);
    } else {
        int32_t cursor = 0;        // left edge of the segment under construction
        bool inconsistent = false;
        for (size_t i = 0; i < arcs.size(); ++i) {
            const CutEdge& e = arcs[i];
            const bool zone_on_left = e.tail_col < e.head_col;  // reachable side of this boundary
            const int32_t g = bottleneck_of(e);
            const bool keep_boundary_col = !white_dominant_under(sk, g, inverted);
            int32_t adj;
            if (zone_on_left) {
                adj = keep_boundary_col ? g : g - 1;               // zone ends here
                if (adj >= cursor) cert.zones.emplace_back(cursor, std::min(adj, cols - 1));
                cursor = adj + 1;
            } else {
                adj = keep_boundary_col ? g : g + 1;               // zone starts here
                cursor = std::max(cursor, adj);
            }
            cert.bottlenecks_adj.push_back(adj);
            // consecutive boundaries must alternate reachable sides
            if (i + 1 < arcs.size() && (arcs[i + 1].tail_col < arcs[i + 1].head_col) == zone_on_left)
                inconsistent = true;
        }
        if ((arcs.back().tail_col > arcs.back().head_col) && cursor <= cols - 1)
            cert.zones.emplace_back(cursor, cols - 1);  // trailing reachable segment
        if (inconsistent) cert.warnings.push_back("cut segments do not alternate");
    }

    std::vector<uint8_t> in_zone(sk.heights.size(), 0);
    for (const auto& [zlo, zhi] : cert.zones)
        for (int32_t c = std::max(zlo, 0); c <= zhi && c < cols; ++c) in_zone[c] = 1;

    // H = majority-color cells of the zones; Gamma(H) counted on the
    // adjacency graph. Under inversion the two sides of the bipartition
    // swap.
    const GridGraph g = grid_graph(sk);
    const auto& side_cells = inverted ? g.white_cells : g.black_cells;
    const auto& side_adj = inverted ? g.white_adj : g.black_adj;
    const size_t other_count = inverted ? g.black_cells.size() : g.white_cells.size();
    std::vector<uint8_t> seen(other_count, 0);
    for (size_t i = 0; i < side_cells.size(); ++i) {
        if (!in_zone[side_cells[i].col]) continue;
        ++cert.witness_black;
        for (int32_t nb : side_adj[i]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                ++cert.witness_nbhd;
            }
        }
    }
    return cert;
}

CertificateBundle make_certificate(const Skyline& sk) {
    if (imbalance(sk) != 0) throw std::invalid_argument("make_certificate: skyline is not balanced");

    CertificateBundle bundle;
    for (int pass = 0; pass < 2; ++pass) {
        const bool inverted = pass == 1;
        FlowNetwork net = build_network(sk);
        if (inverted) net = flip_roles(std::move(net));
        const MatchPlan plan = greedy_stack(net);
        const ArcFlow flow = arc_flow_from_pairs(net, plan);
        CutSet cut = min_cut(net, flow);

        // The least column touched by a transversal crossing arc must be
        // black-dominant under the current coloring; otherwise invert the
        // colors and redo on the flipped network.
        int32_t least_col = -1;
        for (const CutEdge& e : cut.edges) {
            if (e.kind != CutArcKind::Transversal) continue;
            least_col = least_col < 0 ? std::min(e.tail_col, e.head_col)
                                      : std::min(least_col, std::min(e.tail_col, e.head_col));
        }
        const bool oriented = least_col < 0 || !white_dominant_under(sk, least_col, inverted);
        if (!oriented && !inverted) continue;

        bundle.cert = build_witness(sk, cut, inverted);
        bundle.cut = std::move(cut);
        bundle.flow_value = plan.value;
        return bundle;
    }
    throw std::logic_error("make_certificate: unreachable");
}

bool verify_certificate(const Skyline& sk, const DeficiencyCertificate& cert, uint64_t cell_bound) {
    if (imbalance(sk) != 0) throw std::invalid_argument("verify_certificate: skyline is not balanced");
    const int64_t diff =
        static_cast<int64_t>(cert.witness_black) - static_cast<int64_t>(cert.witness_nbhd);
    const bool identity = 2 * diff == static_cast<int64_t>(deficiency(sk));
    const bool hall = static_cast<int64_t>(d_oracle(sk, cell_bound)) >= diff;
    return identity && hall;
}

}  // namespace manhattan
