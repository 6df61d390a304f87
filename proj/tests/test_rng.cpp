#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fsmsynth/rng.hpp"

using namespace fsmsynth;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("different seeds diverge") {
    Rng a(1), b(2);
    bool differ = false;
    for (int i = 0; i < 16 && !differ; ++i) {
        differ = a.next_u64() != b.next_u64();
    }
    CHECK(differ);
}

TEST_CASE("index stays in range and covers its domain") {
    Rng rng(7);
    for (uint32_t n : {1u, 2u, 3u, 5u, 7u, 10u, 100u, 1000u}) {
        std::vector<uint32_t> hits(n, 0);
        const int draws = static_cast<int>(n) * 200;
        for (int i = 0; i < draws; ++i) {
            const uint32_t v = rng.index(n);
            REQUIRE(v < n);
            ++hits[v];
        }
        for (uint32_t v = 0; v < n; ++v) {
            CHECK(hits[v] > 0);
        }
    }
}

TEST_CASE("index of a one-element range consumes no randomness") {
    Rng a(9), b(9);
    CHECK(a.index(1) == 0);
    CHECK(a.index(0) == 0);
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("real lies in the unit interval and is not constant") {
    Rng rng(11);
    double sum = 0.0;
    double lo = 1.0, hi = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const double v = rng.real();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.03));
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("chance honors its extremes") {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        CHECK_FALSE(rng.chance(0.0));
        CHECK(rng.chance(1.0));
    }
}
