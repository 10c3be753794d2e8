#include "manhattan/solver_reference.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "manhattan/errors.hpp"

namespace manhattan {

namespace {

// Adjacency-list flow graph; edges stored in forward/reverse pairs so the
// reverse of edge e sits at index e^1.
struct ResidualGraph {
    struct Edge {
        int to;
        uint64_t cap;
        uint64_t flow;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    explicit ResidualGraph(int n) : adj(n) {}

    void add_edge(int from, int to, uint64_t cap) {
        adj[from].push_back(static_cast<int>(edges.size()));
        edges.push_back({to, cap, 0});
        adj[to].push_back(static_cast<int>(edges.size()));
        edges.push_back({from, 0, 0});
    }

    uint64_t residual(int e) const { return edges[e].cap - edges[e].flow; }
};

}  // namespace

uint64_t max_flow_reference(const FlowNetwork& net) {
    const int n = static_cast<int>(net.verts.size());
    const int source = n;
    const int sink = n + 1;
    ResidualGraph g(n + 2);
    for (int i = 0; i < n; ++i) {
        if (net.verts[i].role == Role::SourceSide)
            g.add_edge(source, i, 1);
        else
            g.add_edge(i, sink, 1);
    }
    for (size_t gap = 0; gap < net.caps.size(); ++gap) {
        const int i = static_cast<int>(gap);
        g.add_edge(i, i + 1, net.caps[gap]);
        g.add_edge(i + 1, i, net.caps[gap]);
    }

    uint64_t value = 0;
    std::vector<int> parent_edge(n + 2);
    for (;;) {
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        parent_edge[source] = -2;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent_edge[sink] == -1) {
            const int u = q.front();
            q.pop();
            for (int e : g.adj[u]) {
                const int v = g.edges[e].to;
                if (parent_edge[v] == -1 && g.residual(e) > 0) {
                    parent_edge[v] = e;
                    q.push(v);
                }
            }
        }
        if (parent_edge[sink] == -1) break;
        uint64_t bottleneck = std::numeric_limits<uint64_t>::max();
        for (int v = sink; v != source;) {
            const int e = parent_edge[v];
            bottleneck = std::min(bottleneck, g.residual(e));
            v = g.edges[e ^ 1].to;
        }
        for (int v = sink; v != source;) {
            const int e = parent_edge[v];
            g.edges[e].flow += bottleneck;
            g.edges[e ^ 1].flow -= bottleneck;
            v = g.edges[e ^ 1].to;
        }
        value += bottleneck;
    }
    return value;
}

GridGraph grid_graph(const Skyline& sk, uint64_t cell_bound) {
    const uint64_t cells = sk.cell_count();
    if (cells > cell_bound)
        throw ScaleError("grid_graph: " + std::to_string(cells) + " cells exceed the oracle bound of " +
                         std::to_string(cell_bound));

    GridGraph g;
    const size_t n = sk.heights.size();
    // side id of each cell, column by column, bottom to top
    std::vector<std::vector<int32_t>> ids(n);
    for (size_t c = 0; c < n; ++c) {
        ids[c].resize(sk.heights[c]);
        for (uint32_t r = 0; r < sk.heights[c]; ++r) {
            const Cell cell{static_cast<int32_t>(c), static_cast<int32_t>(r)};
            if (cell_color(cell.col, cell.row) == Color::Black) {
                ids[c][r] = static_cast<int32_t>(g.black_cells.size());
                g.black_cells.push_back(cell);
            } else {
                ids[c][r] = static_cast<int32_t>(g.white_cells.size());
                g.white_cells.push_back(cell);
            }
        }
    }
    g.black_adj.resize(g.black_cells.size());
    g.white_adj.resize(g.white_cells.size());
    auto connect = [&](size_t c1, uint32_t r1, size_t c2, uint32_t r2) {
        const bool first_black = cell_color(static_cast<int32_t>(c1), static_cast<int32_t>(r1)) == Color::Black;
        const int32_t b = first_black ? ids[c1][r1] : ids[c2][r2];
        const int32_t w = first_black ? ids[c2][r2] : ids[c1][r1];
        g.black_adj[b].push_back(w);
        g.white_adj[w].push_back(b);
        ++g.edge_count;
    };
    for (size_t c = 0; c < n; ++c) {
        for (uint32_t r = 0; r < sk.heights[c]; ++r) {
            if (r + 1 < sk.heights[c]) connect(c, r, c, r + 1);
            if (c + 1 < n && r < sk.heights[c + 1]) connect(c, r, c + 1, r);
        }
    }
    return g;
}

uint64_t max_matching(const GridGraph& g) {
    const size_t nb = g.black_cells.size();
    const size_t nw = g.white_cells.size();
    std::vector<int32_t> match_b(nb, -1);
    std::vector<int32_t> match_w(nw, -1);
    uint64_t size = 0;

    for (size_t b = 0; b < nb; ++b) {
        for (int32_t w : g.black_adj[b]) {
            if (match_w[w] < 0) {
                match_w[w] = static_cast<int32_t>(b);
                match_b[b] = w;
                ++size;
                break;
            }
        }
    }

    std::vector<uint32_t> visited(nw, 0);
    uint32_t stamp = 0;
    std::function<bool(int32_t)> augment = [&](int32_t b) {
        for (int32_t w : g.black_adj[b]) {
            if (visited[w] == stamp) continue;
            visited[w] = stamp;
            if (match_w[w] < 0 || augment(match_w[w])) {
                match_w[w] = b;
                match_b[b] = w;
                return true;
            }
        }
        return false;
    };
    for (size_t b = 0; b < nb; ++b) {
        if (match_b[b] >= 0) continue;
        ++stamp;
        if (augment(static_cast<int32_t>(b))) ++size;
    }
    return size;
}

uint64_t d_oracle(const Skyline& sk, uint64_t cell_bound) {
    return sk.cell_count() - 2 * max_matching(grid_graph(sk, cell_bound));
}

}  // namespace manhattan
