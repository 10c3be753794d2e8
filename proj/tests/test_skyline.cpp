#include <doctest.h>

#include <random>

#include "manhattan/skyline.hpp"
#include "test_util.hpp"

using namespace manhattan;

namespace {
const Skyline kRidge13{5, 4, 3, 3, 2, 3, 4, 3, 2, 1, 1, 2, 3};
const Skyline kStair6{5, 4, 4, 3, 2, 3};
}  // namespace

TEST_CASE("color counts") {
    const ColorCounts ridge = color_counts(kRidge13);
    CHECK(ridge.black == 18);
    CHECK(ridge.white == 18);
    CHECK(color_counts(Skyline{}).black == 0);
    CHECK(color_counts(Skyline{}).white == 0);
    CHECK(color_counts(Skyline{1}).black == 1);
    CHECK(color_counts(Skyline{1}).white == 0);

    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 30, 12);
        const ColorCounts fast = color_counts(sk);
        const ColorCounts brute = testutil::brute_color_counts(sk);
        REQUIRE(fast.black == brute.black);
        REQUIRE(fast.white == brute.white);
        REQUIRE(fast.black + fast.white == sk.cell_count());
    }
}

TEST_CASE("dominant columns") {
    const DominantInfo ridge = dominant_columns(kRidge13);
    CHECK(ridge.blacks == std::vector<int32_t>{0, 2, 10, 12});
    CHECK(ridge.whites == std::vector<int32_t>{3, 5, 7, 9});
    CHECK(ridge.s_order == std::vector<int32_t>{0, 2, 3, 5, 7, 9, 10, 12});

    CHECK(dominant_columns(Skyline{2, 4, 6}).s_order.empty());

    const DominantInfo stair = dominant_columns(kStair6);
    CHECK(stair.blacks == std::vector<int32_t>{0});
    CHECK(stair.whites == std::vector<int32_t>{3, 5});
}

TEST_CASE("dominant columns cover exactly the odd heights") {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 300; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 40, 9);
        const DominantInfo info = dominant_columns(sk);
        size_t odd = 0;
        for (uint32_t h : sk.heights) odd += h % 2;
        REQUIRE(info.blacks.size() + info.whites.size() == odd);
        for (int32_t c : info.blacks) REQUIRE(c % 2 == 0);
        for (int32_t c : info.whites) REQUIRE(c % 2 == 1);
    }
}

TEST_CASE("imbalance") {
    CHECK(imbalance(kRidge13) == 0);
    CHECK(imbalance(kStair6) == -1);
    CHECK(imbalance(Skyline{1}) == 1);
}

TEST_CASE("balance fixtures") {
    CHECK(balance(kStair6) == Skyline{5, 4, 4, 3, 2, 3, 0, 0, 1});
    CHECK(balance(kStair6).heights == std::vector<uint32_t>{5, 4, 4, 3, 2, 3, 0, 0, 1});
    CHECK(balance(kRidge13) == kRidge13);
    // the single appended white cell must land on an odd column index
    const Skyline one = balance(Skyline{1});
    CHECK(one.heights == std::vector<uint32_t>{1, 0, 0, 1});
}

TEST_CASE("balance properties") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 25, 7);
        const Skyline bal = balance(sk);
        REQUIRE(imbalance(bal) == 0);
        REQUIRE(balance(bal) == bal);  // idempotent
        // original is a prefix
        REQUIRE(sk.heights.size() <= bal.heights.size());
        for (size_t c = 0; c < sk.heights.size(); ++c) REQUIRE(bal.heights[c] == sk.heights[c]);
        // appended columns are isolated height-1 cells of the lacking color
        const int64_t imb = imbalance(sk);
        const ColorCounts before = color_counts(sk);
        const ColorCounts after = color_counts(bal);
        if (imb < 0) {
            REQUIRE(after.black == before.black + static_cast<uint64_t>(-imb));
            REQUIRE(after.white == before.white);
        } else {
            REQUIRE(after.white == before.white + static_cast<uint64_t>(imb));
            REQUIRE(after.black == before.black);
        }
    }
}

TEST_CASE("inclusion fixtures") {
    CHECK(is_included(Skyline{2, 2, 2, 2, 2, 3}, kStair6));
    CHECK(is_included(kStair6, kStair6));
    CHECK_FALSE(is_included(Skyline{3}, Skyline{2}));
    CHECK(is_included(Skyline{}, Skyline{1}));
    CHECK(is_included(Skyline{1, 0, 0}, Skyline{1}));
}

TEST_CASE("inclusion is a partial order") {
    std::mt19937_64 rng(104);
    for (int i = 0; i < 2000; ++i) {
        const Skyline a = testutil::random_skyline(rng, 6, 3);
        const Skyline b = testutil::random_skyline(rng, 6, 3);
        const Skyline c = testutil::random_skyline(rng, 6, 3);
        REQUIRE(is_included(a, a));
        if (is_included(a, b) && is_included(b, a)) REQUIRE(a == b);
        if (is_included(a, b) && is_included(b, c)) REQUIRE(is_included(a, c));
    }
}

TEST_CASE("prepending a zero column swaps the colors") {
    std::mt19937_64 rng(105);
    for (int i = 0; i < 300; ++i) {
        const Skyline sk = testutil::random_skyline(rng, 30, 9);
        std::vector<uint32_t> shifted{0};
        shifted.insert(shifted.end(), sk.heights.begin(), sk.heights.end());
        const Skyline sh(shifted);

        const ColorCounts cc = color_counts(sk);
        const ColorCounts cc_sh = color_counts(sh);
        REQUIRE(cc.black == cc_sh.white);
        REQUIRE(cc.white == cc_sh.black);

        const DominantInfo info = dominant_columns(sk);
        const DominantInfo info_sh = dominant_columns(sh);
        REQUIRE(info.blacks.size() == info_sh.whites.size());
        REQUIRE(info.whites.size() == info_sh.blacks.size());
        for (size_t k = 0; k < info.blacks.size(); ++k)
            REQUIRE(info_sh.whites[k] == info.blacks[k] + 1);
        for (size_t k = 0; k < info.whites.size(); ++k)
            REQUIRE(info_sh.blacks[k] == info.whites[k] + 1);
    }
}

TEST_CASE("equality ignores trailing zero columns") {
    CHECK(Skyline{1, 2} == Skyline{1, 2, 0, 0});
    CHECK_FALSE(Skyline{1, 2} == Skyline{1, 2, 1});
    CHECK_FALSE(Skyline{0, 1} == Skyline{1, 0});
    CHECK(Skyline{} == Skyline{0, 0});
}
