#include <doctest.h>

#include <random>
#include <stdexcept>

#include "manhattan/flownet.hpp"
#include "test_util.hpp"

using namespace manhattan;

namespace {
const Skyline kRidge13{5, 4, 3, 3, 2, 3, 4, 3, 2, 1, 1, 2, 3};
const Skyline kStair6{5, 4, 4, 3, 2, 3};
}  // namespace

TEST_CASE("network of the 13-column ridge") {
    const FlowNetwork net = build_network(kRidge13);
    REQUIRE(net.verts.size() == 8);
    const std::vector<int32_t> source_cols{0, 2, 10, 12};
    const std::vector<int32_t> sink_cols{3, 5, 7, 9};
    std::vector<int32_t> got_source, got_sink;
    for (const FlowVertex& v : net.verts)
        (v.role == Role::SourceSide ? got_source : got_sink).push_back(v.col);
    CHECK(got_source == source_cols);
    CHECK(got_sink == sink_cols);
    CHECK(net.caps == std::vector<uint32_t>{2, 2, 1, 2, 1, 1, 1});
}

TEST_CASE("network fixtures") {
    const FlowNetwork even = build_network(Skyline{2, 4});
    CHECK(even.verts.empty());
    CHECK(even.caps.empty());

    const FlowNetwork stair = build_network(kStair6);
    REQUIRE(stair.verts.size() == 3);
    CHECK(stair.verts[0].col == 0);
    CHECK(stair.verts[1].col == 3);
    CHECK(stair.verts[2].col == 5);
    CHECK(stair.caps == std::vector<uint32_t>{2, 1});
}

TEST_CASE("range minimum index") {
    const RangeMinIndex ridge(kRidge13);
    CHECK(ridge.query(0, 2) == 3);
    for (size_t i = 0; i < kRidge13.heights.size(); ++i) CHECK(ridge.query(i, i) == kRidge13.heights[i]);
    CHECK(RangeMinIndex(Skyline{1, 0, 1}).query(0, 2) == 0);
    CHECK_THROWS_AS(ridge.query(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ridge.query(0, 13), std::invalid_argument);
    CHECK_THROWS_AS(RangeMinIndex(Skyline{}).query(0, 0), std::invalid_argument);

    std::mt19937_64 rng(201);
    for (int i = 0; i < 200; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 60, 20);
        const RangeMinIndex idx(sk);
        for (int t = 0; t < 50; ++t) {
            size_t a = rng() % sk.heights.size();
            size_t b = rng() % sk.heights.size();
            if (a > b) std::swap(a, b);
            REQUIRE(idx.query(a, b) == testutil::brute_range_min(sk, a, b));
        }
    }
}

TEST_CASE("scan capacities match the brute-force minima") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 500; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 40, 9);
        const FlowNetwork net = build_network(sk);
        const DominantInfo info = dominant_columns(sk);
        REQUIRE(net.verts.size() == info.blacks.size() + info.whites.size());
        for (size_t g = 0; g + 1 < net.verts.size(); ++g) {
            const uint32_t x = testutil::brute_range_min(sk, net.verts[g].col, net.verts[g + 1].col);
            REQUIRE(net.caps[g] == x / 2 + x % 2);
            // zero capacity exactly when a height-0 column sits strictly between
            bool zero_between = false;
            for (int32_t k = net.verts[g].col + 1; k < net.verts[g + 1].col; ++k)
                zero_between |= sk.heights[k] == 0;
            REQUIRE((net.caps[g] == 0) == zero_between);
        }
    }
}

TEST_CASE("reversed skyline rebuilds to the reversed network") {
    std::mt19937_64 rng(203);
    for (int i = 0; i < 300; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 30, 9);
        std::vector<uint32_t> rev(sk.heights.rbegin(), sk.heights.rend());
        const Skyline rsk(std::move(rev));
        const FlowNetwork net = build_network(sk);
        const FlowNetwork rnet = build_network(rsk);
        REQUIRE(rnet.verts.size() == net.verts.size());
        REQUIRE(std::vector<uint32_t>(net.caps.rbegin(), net.caps.rend()) == rnet.caps);
        const auto n = static_cast<int32_t>(sk.heights.size());
        const bool parity_flips = n % 2 == 0;  // column c maps to n-1-c
        for (size_t k = 0; k < net.verts.size(); ++k) {
            const FlowVertex& orig = net.verts[net.verts.size() - 1 - k];
            REQUIRE(rnet.verts[k].col == n - 1 - orig.col);
            const Role expect =
                parity_flips ? (orig.role == Role::SourceSide ? Role::SinkSide : Role::SourceSide)
                             : orig.role;
            REQUIRE(rnet.verts[k].role == expect);
        }
    }
}

TEST_CASE("network dump format") {
    CHECK(dump_network(build_network(kStair6)) == "0 source\n3 sink\n5 sink\n2\n1\n");
    CHECK(dump_network(build_network(Skyline{2, 4})).empty());
}
