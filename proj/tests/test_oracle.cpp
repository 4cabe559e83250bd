#include <doctest.h>

#include <algorithm>
#include <random>

#include "frobkit/oracle.hpp"

using namespace frobkit;

namespace {

std::vector<std::uint64_t> rand_set(std::mt19937_64& rng, std::uint64_t max_a1) {
    std::uint64_t a1 = 2 + rng() % (max_a1 - 1);
    std::vector<std::uint64_t> gens{a1};
    std::uint64_t extra = 1 + rng() % 4;
    for (std::uint64_t i = 0; i < extra; ++i) {
        gens.push_back(a1 + 1 + rng() % (3 * a1));
    }
    std::uint64_t g = 0;
    for (std::uint64_t v : gens) g = std::gcd(g, v);
    if (g != 1) gens.push_back(a1 + 1);
    return gens;
}

}  // namespace

TEST_CASE("representability of (4,7,11)") {
    RepresentabilityMap map = representability_map(GeneratorSet({4, 7, 11}));
    std::vector<std::uint64_t> expect_gaps{1, 2, 3, 5, 6, 9, 10, 13, 17};
    for (std::uint64_t n = 0; n <= map.bound; ++n) {
        bool is_gap = std::find(expect_gaps.begin(), expect_gaps.end(), n) !=
                      expect_gaps.end();
        CHECK(map.bits[n] == !is_gap);
    }
    CHECK(gaps(GeneratorSet({4, 7, 11})) == expect_gaps);
}

TEST_CASE("trivial generator sets") {
    CHECK(gaps(GeneratorSet({2, 3})) == std::vector<std::uint64_t>{1});
    CHECK(gaps(GeneratorSet({1})).empty());
    GapReport unit = oracle_report(GeneratorSet({1}));
    CHECK(unit.g == -1);
    CHECK(unit.n == 0);
    CHECK(unit.s == 0);
}

TEST_CASE("gap lists match the worked examples") {
    CHECK(gaps(GeneratorSet({7, 9, 11})) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26});
    CHECK(gaps(GeneratorSet({12, 17, 22, 27, 42})) ==
          std::vector<std::uint64_t>{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                     13, 14, 15, 16, 18, 19, 20, 21, 23, 25, 26,
                                     28, 30, 31, 32, 33, 35, 37, 38, 40, 43, 45,
                                     47, 50, 52, 55, 57, 62, 67, 74, 79});
}

TEST_CASE("oracle report totals") {
    CHECK(oracle_report(GeneratorSet({14, 17, 20, 23, 38})).s == 953);
    CHECK(oracle_report(GeneratorSet({16, 17, 18, 20, 24})).s == 684);
    CHECK(oracle_report(GeneratorSet({12, 17, 22, 27, 42})).s == 1211);
    GapReport w = oracle_report(GeneratorSet({7, 9, 11}), GaussianRational(2));
    CHECK(*w.weighted == GaussianRational(BigRational(BigInt("2160333442"))));
}

TEST_CASE("lambda = 1 reproduces the plain sum, lambda = 0 is rejected") {
    GapReport r = oracle_report(GeneratorSet({7, 9, 11}), GaussianRational(1));
    CHECK(*r.weighted == GaussianRational(165));
    CHECK(r.s == 165);
    CHECK_THROWS_AS(oracle_report(GeneratorSet({7, 9, 11}), GaussianRational(0)),
                    LambdaDegenerate);
}

TEST_CASE("rational and complex weights") {
    // NR(2,3) = {1}
    GapReport half = oracle_report(GeneratorSet({2, 3}),
                                   GaussianRational(BigRational(1, 2)));
    CHECK(*half.weighted == GaussianRational(BigRational(1, 2)));
    GapReport im = oracle_report(GeneratorSet({6, 11, 16, 21}),
                                 GaussianRational(BigRational(0), BigRational(1)));
    CHECK(*im.weighted ==
          GaussianRational(BigRational(-20), BigRational(-22)));
}

TEST_CASE("termination witness and forward closure") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 80; ++iter) {
        GeneratorSet gens(rand_set(rng, 40));
        RepresentabilityMap map = representability_map(gens);
        std::uint64_t base = gens.smallest();
        REQUIRE(map.bits.size() == map.bound + 1);
        // the array ends with a run of `base` consecutive true values
        for (std::uint64_t n = map.bound + 1 - base; n <= map.bound; ++n) {
            CHECK(map.bits[n]);
        }
        // bits[n] implies bits[n + a_j] within the bound
        for (std::uint64_t n = 0; n <= map.bound; ++n) {
            if (!map.bits[n]) continue;
            for (std::uint64_t g : gens.values()) {
                if (n + g <= map.bound) {
                    CHECK(map.bits[n + g]);
                }
            }
        }
    }
}

TEST_CASE("adding a generator never enlarges the gap set") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<std::uint64_t> base_gens = rand_set(rng, 40);
        std::vector<std::uint64_t> larger = base_gens;
        larger.push_back(2 + rng() % 80);
        std::vector<std::uint64_t> before = gaps(GeneratorSet(base_gens));
        std::vector<std::uint64_t> after = gaps(GeneratorSet(larger));
        CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
    }
}

TEST_CASE("gaps are empty exactly when 1 is a generator") {
    CHECK(gaps(GeneratorSet({1, 5})).empty());
    CHECK(!gaps(GeneratorSet({5, 7, 9, 11, 13})).empty());
}

TEST_CASE("cell cap raises BoundOverflow") {
    CHECK_THROWS_AS(representability_map(GeneratorSet({101, 103}), 50),
                    BoundOverflow);
}
