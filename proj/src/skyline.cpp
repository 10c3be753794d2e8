#include "manhattan/skyline.hpp"

#include <algorithm>

namespace manhattan {

uint64_t Skyline::cell_count() const {
    uint64_t total = 0;
    for (uint32_t h : heights) total += h;
    return total;
}

bool Skyline::contains(Cell c) const {
    if (c.col < 0 || c.row < 0) return false;
    const auto col = static_cast<size_t>(c.col);
    return col < heights.size() && static_cast<uint32_t>(c.row) < heights[col];
}

bool operator==(const Skyline& a, const Skyline& b) {
    size_t na = a.heights.size();
    size_t nb = b.heights.size();
    while (na > 0 && a.heights[na - 1] == 0) --na;
    while (nb > 0 && b.heights[nb - 1] == 0) --nb;
    return na == nb && std::equal(a.heights.begin(), a.heights.begin() + na, b.heights.begin());
}

ColorCounts color_counts(const Skyline& sk) {
    ColorCounts cc;
    for (size_t c = 0; c < sk.heights.size(); ++c) cc.black += column_black_count(c, sk.heights[c]);
    cc.white = sk.cell_count() - cc.black;
    return cc;
}

DominantInfo dominant_columns(const Skyline& sk) {
    DominantInfo info;
    for (size_t c = 0; c < sk.heights.size(); ++c) {
        if (sk.heights[c] % 2 == 0) continue;
        const auto col = static_cast<int32_t>(c);
        (c % 2 == 0 ? info.blacks : info.whites).push_back(col);
        info.s_order.push_back(col);
    }
    return info;
}

int64_t imbalance(const Skyline& sk) {
    const ColorCounts cc = color_counts(sk);
    return static_cast<int64_t>(cc.black) - static_cast<int64_t>(cc.white);
}

Skyline balance(const Skyline& sk) {
    const int64_t imb = imbalance(sk);
    if (imb == 0) return sk;
    Skyline out = sk;
    const uint64_t missing = imb < 0 ? static_cast<uint64_t>(-imb) : static_cast<uint64_t>(imb);
    // A height-1 column contributes one cell of the color of its index
    // parity: even index -> black, odd index -> white.
    const size_t want_parity = imb < 0 ? 0 : 1;
    out.heights.push_back(0);  // separator from the original silhouette
    for (uint64_t i = 0; i < missing; ++i) {
        if (i > 0) out.heights.push_back(0);
        if (out.heights.size() % 2 != want_parity) out.heights.push_back(0);
        out.heights.push_back(1);
    }
    return out;
}

bool is_included(const Skyline& p, const Skyline& q) {
    const size_t n = std::max(p.heights.size(), q.heights.size());
    for (size_t i = 0; i < n; ++i) {
        const uint32_t hp = i < p.heights.size() ? p.heights[i] : 0;
        const uint32_t hq = i < q.heights.size() ? q.heights[i] : 0;
        if (hp > hq) return false;
    }
    return true;
}

}  // namespace manhattan
