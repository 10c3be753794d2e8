#include "manhattan/generate.hpp"

#include <algorithm>
#include <random>

namespace manhattan {

std::optional<Dist> parse_dist(std::string_view name) {
    if (name == "uniform") return Dist::Uniform;
    if (name == "monotone") return Dist::Monotone;
    if (name == "bottleneck-chain") return Dist::BottleneckChain;
    return std::nullopt;
}

std::string dist_name(Dist d) {
    switch (d) {
        case Dist::Uniform: return "uniform";
        case Dist::Monotone: return "monotone";
        case Dist::BottleneckChain: return "bottleneck-chain";
    }
    return "uniform";
}

Skyline generate(const InstanceSpec& spec) {
    // Raw modulo draws keep the stream identical on every platform; the mild
    // bias is irrelevant for instance generation.
    std::mt19937_64 rng(spec.seed);
    std::vector<uint32_t> heights;
    heights.reserve(spec.columns);
    switch (spec.dist) {
        case Dist::Uniform:
        case Dist::Monotone:
            for (uint32_t c = 0; c < spec.columns; ++c)
                heights.push_back(static_cast<uint32_t>(rng() % (uint64_t{spec.max_height} + 1)));
            if (spec.dist == Dist::Monotone) std::sort(heights.begin(), heights.end());
            break;
        case Dist::BottleneckChain: {
            // Plateaus of near-maximal height joined by height 1-2 pinch
            // columns: many dominant columns across low-capacity gaps.
            const uint32_t base = std::max<uint32_t>(3, spec.max_height);
            while (heights.size() < spec.columns) {
                const uint32_t run = 1 + static_cast<uint32_t>(rng() % 4);
                const uint32_t h = base - static_cast<uint32_t>(rng() % std::min<uint32_t>(base, 3));
                for (uint32_t k = 0; k < run && heights.size() < spec.columns; ++k)
                    heights.push_back(h);
                if (heights.size() < spec.columns)
                    heights.push_back(1 + static_cast<uint32_t>(rng() % 2));
            }
            break;
        }
    }
    return Skyline(std::move(heights));
}

}  // namespace manhattan
