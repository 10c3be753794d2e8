#include "manhattan/flownet.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace manhattan {

FlowNetwork build_network(const Skyline& sk) {
    FlowNetwork net;
    size_t dominant = 0;
    for (uint32_t h : sk.heights) dominant += h % 2;
    net.verts.reserve(dominant);
    net.caps.reserve(dominant > 0 ? dominant - 1 : 0);
    uint32_t run_min = 0;
    bool have_prev = false;
    for (size_t c = 0; c < sk.heights.size(); ++c) {
        const uint32_t h = sk.heights[c];
        if (have_prev) run_min = std::min(run_min, h);
        if (h % 2 == 1) {
            if (have_prev) net.caps.push_back(run_min / 2 + run_min % 2);
            net.verts.push_back({static_cast<int32_t>(c), c % 2 == 0 ? Role::SourceSide : Role::SinkSide});
            run_min = h;
            have_prev = true;
        }
    }
    return net;
}

std::string dump_network(const FlowNetwork& net) {
    std::ostringstream out;
    for (const FlowVertex& v : net.verts)
        out << v.col << ' ' << (v.role == Role::SourceSide ? "source" : "sink") << '\n';
    for (uint32_t c : net.caps) out << c << '\n';
    return out.str();
}

RangeMinIndex::RangeMinIndex(const Skyline& sk) : size_(sk.heights.size()) {
    table_.push_back(sk.heights);
    for (size_t len = 1; 2 * len <= size_; len *= 2) {
        const auto& prev = table_.back();
        std::vector<uint32_t> row(size_ - 2 * len + 1);
        for (size_t i = 0; i < row.size(); ++i) row[i] = std::min(prev[i], prev[i + len]);
        table_.push_back(std::move(row));
    }
}

uint32_t RangeMinIndex::query(size_t i, size_t j) const {
    if (i > j || j >= size_) throw std::invalid_argument("RangeMinIndex::query: bad interval");
    const size_t len = j - i + 1;
    const size_t k = std::bit_width(len) - 1;  // floor(log2(len))
    return std::min(table_[k][i], table_[k][j + 1 - (size_t{1} << k)]);
}

}  // namespace manhattan
