#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "manhattan/skyline.hpp"

namespace manhattan {

enum class Dist : uint8_t {
    Uniform,          // independent heights in [0, max_height]
    Monotone,         // non-decreasing heights (staircase instances)
    BottleneckChain,  // tall plateaus separated by thin pinch columns
};

std::optional<Dist> parse_dist(std::string_view name);
std::string dist_name(Dist d);

// Identical spec and seed always produce the identical skyline, across
// platforms: draws come straight from a mt19937_64 stream.
struct InstanceSpec {
    uint32_t columns = 0;
    uint32_t max_height = 9;
    Dist dist = Dist::Uniform;
    uint64_t seed = 0;
};

Skyline generate(const InstanceSpec& spec);

}  // namespace manhattan
