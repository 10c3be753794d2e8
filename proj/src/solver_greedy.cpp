#include "manhattan/solver_greedy.hpp"

#include <algorithm>
#include <limits>

namespace manhattan {

ArcFlow ArcFlow::zero(const FlowNetwork& net) {
    ArcFlow f;
    f.lr.assign(net.caps.size(), 0);
    f.rl.assign(net.caps.size(), 0);
    f.unit_used.assign(net.verts.size(), 0);
    return f;
}

std::optional<std::pair<int32_t, int32_t>> find_tractable(const FlowNetwork& net, const ArcFlow& st) {
    const int n = static_cast<int>(net.verts.size());
    for (int i = 0; i < n; ++i) {
        // A saturated unit arc on an endpoint leaves no room to augment the
        // source->...->sink path, so such vertices only qualify as interior.
        if (st.unit_used[i]) continue;
        const bool from_source = net.verts[i].role == Role::SourceSide;
        for (int j = i + 1; j < n; ++j) {
            const int gap = j - 1;
            const uint32_t used = from_source ? st.lr[gap] : st.rl[gap];
            if (used >= net.caps[gap]) break;  // span blocked from here on
            if (!st.unit_used[j]) {
                if (net.verts[j].role != net.verts[i].role) return std::make_pair(i, j);
                break;  // unmatched same-role vertex can never become interior
            }
        }
    }
    return std::nullopt;
}

MatchPlan greedy_naive(const FlowNetwork& net) {
    MatchPlan plan;
    plan.arc_flow = ArcFlow::zero(net);
    ArcFlow& f = plan.arc_flow;
    while (auto p = find_tractable(net, f)) {
        const auto [i, j] = *p;
        const bool from_source = net.verts[i].role == Role::SourceSide;
        f.unit_used[i] = 1;
        f.unit_used[j] = 1;
        auto& dir = from_source ? f.lr : f.rl;
        for (int g = i; g < j; ++g) dir[g] += 1;
        plan.pairs.emplace_back(i, j);
    }
    plan.value = plan.pairs.size();
    return plan;
}

MatchPlan greedy_stack(const FlowNetwork& net) {
    constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();
    MatchPlan plan;
    const int n = static_cast<int>(net.verts.size());
    plan.pairs.reserve(net.verts.size() / 2);
    std::vector<int32_t> stack;
    // below[k] = residual (lr, rl) of the segment between stack[k-1] and
    // stack[k]; the bottom entry gets (inf, inf) since nothing to its left is
    // ever spanned again.
    std::vector<std::pair<uint64_t, uint64_t>> below;
    stack.reserve(net.verts.size());
    below.reserve(net.verts.size());
    // Residuals of the segment between the stack top and the scan position.
    uint64_t frontier_lr = kInf;
    uint64_t frontier_rl = kInf;
    for (int v = 0; v < n; ++v) {
        if (v > 0) {
            frontier_lr = std::min<uint64_t>(frontier_lr, net.caps[v - 1]);
            frontier_rl = std::min<uint64_t>(frontier_rl, net.caps[v - 1]);
        }
        if (!stack.empty() && net.verts[stack.back()].role != net.verts[v].role) {
            const bool from_source = net.verts[stack.back()].role == Role::SourceSide;
            uint64_t& needed = from_source ? frontier_lr : frontier_rl;
            if (needed > 0) {
                needed -= 1;
                plan.pairs.emplace_back(stack.back(), v);
                // The consumed segment merges into the one below the popped
                // vertex; v itself matches at most once.
                frontier_lr = std::min(frontier_lr, below.back().first);
                frontier_rl = std::min(frontier_rl, below.back().second);
                stack.pop_back();
                below.pop_back();
                continue;
            }
        }
        below.emplace_back(stack.empty() ? std::make_pair(kInf, kInf)
                                         : std::make_pair(frontier_lr, frontier_rl));
        stack.push_back(v);
        frontier_lr = kInf;
        frontier_rl = kInf;
    }
    plan.value = plan.pairs.size();
    return plan;
}

ArcFlow arc_flow_from_pairs(const FlowNetwork& net, const MatchPlan& plan) {
    ArcFlow f = ArcFlow::zero(net);
    for (const auto& [i, j] : plan.pairs) {
        const bool from_source = net.verts[i].role == Role::SourceSide;
        f.unit_used[i] = 1;
        f.unit_used[j] = 1;
        auto& dir = from_source ? f.lr : f.rl;
        for (int32_t g = i; g < j; ++g) dir[g] += 1;
    }
    return f;
}

uint64_t deficiency(const Skyline& sk) {
    const FlowNetwork net = build_network(sk);
    const MatchPlan plan = greedy_stack(net);
    return net.verts.size() - 2 * plan.value;
}

}  // namespace manhattan
