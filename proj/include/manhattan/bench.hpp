#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manhattan/generate.hpp"

namespace manhattan {

struct BenchRow {
    uint32_t columns = 0;
    double seconds = 0.0;             // median single-run time of build + solve
    double seconds_per_column = 0.0;
};

// For each size: generates one seeded instance, then times
// build_network + greedy_stack; reps medians, inner_iters runs per rep to
// push measurements above timer noise.
std::vector<BenchRow> run_bench(const std::vector<uint32_t>& sizes, uint32_t reps,
                                uint32_t max_height, uint64_t seed, uint32_t inner_iters = 4);

// "columns,seconds,seconds_per_column" header plus one row per size.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace manhattan
