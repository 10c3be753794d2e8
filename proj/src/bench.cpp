#include "manhattan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "manhattan/solver_greedy.hpp"

namespace manhattan {

std::vector<BenchRow> run_bench(const std::vector<uint32_t>& sizes, uint32_t reps,
                                uint32_t max_height, uint64_t seed, uint32_t inner_iters) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    reps = std::max<uint32_t>(reps, 1);
    inner_iters = std::max<uint32_t>(inner_iters, 1);
    volatile uint64_t sink = 0;  // keep the solver runs observable
    for (uint32_t size : sizes) {
        const Skyline sk = generate({size, max_height, Dist::Uniform, seed});
        std::vector<double> samples;
        samples.reserve(reps);
        for (uint32_t rep = 0; rep < reps; ++rep) {
            const auto start = clock::now();
            for (uint32_t it = 0; it < inner_iters; ++it) {
                const FlowNetwork net = build_network(sk);
                sink = sink + greedy_stack(net).value;
            }
            const std::chrono::duration<double> elapsed = clock::now() - start;
            samples.push_back(elapsed.count() / inner_iters);
        }
        std::sort(samples.begin(), samples.end());
        const double median = samples[samples.size() / 2];
        rows.push_back({size, median, size > 0 ? median / size : 0.0});
    }
    (void)sink;
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "columns,seconds,seconds_per_column\n";
    char buf[96];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%u,%.9f,%.3e\n", r.columns, r.seconds, r.seconds_per_column);
        out += buf;
    }
    return out;
}

}  // namespace manhattan
