#include <doctest.h>

#include <random>

#include "frobkit/oracle.hpp"
#include "frobkit/semigroup.hpp"

using namespace frobkit;

namespace {
const GaussianRational kI{BigRational(0), BigRational(1)};
}

TEST_CASE("generator set validation") {
    GeneratorSet set({11, 4, 7, 7, 4});
    CHECK(set.values() == std::vector<std::uint64_t>{4, 7, 11});
    CHECK(set.smallest() == 4);
    CHECK_THROWS_AS(GeneratorSet({}), InvalidGenerators);
    CHECK_THROWS_AS(GeneratorSet({0, 3}), InvalidGenerators);
    CHECK_THROWS_AS(GeneratorSet({4, 6}), InvalidGenerators);  // gcd 2
    CHECK_NOTHROW(GeneratorSet({4, 8, 7}));  // redundant multiple is fine
}

TEST_CASE("apery tables") {
    CHECK(apery_set(GeneratorSet({4, 7, 11})).m ==
          std::vector<std::uint64_t>{0, 21, 14, 7});
    CHECK(apery_set(GeneratorSet({2, 3})).m == std::vector<std::uint64_t>{0, 3});
    CHECK(apery_set(GeneratorSet({1})).m == std::vector<std::uint64_t>{0});
}

TEST_CASE("g, n, s from the table") {
    AperyTable t = apery_set(GeneratorSet({4, 7, 11}));
    CHECK(g_from_apery(t) == 17);
    CHECK(n_from_apery(t) == 9);
    CHECK(s_from_apery(t) == 66);

    AperyTable t23 = apery_set(GeneratorSet({2, 3}));
    CHECK(g_from_apery(t23) == 1);
    CHECK(n_from_apery(t23) == 1);
    CHECK(s_from_apery(t23) == 1);

    AperyTable unit = apery_set(GeneratorSet({1}));
    CHECK(g_from_apery(unit) == -1);
    CHECK(n_from_apery(unit) == 0);
    CHECK(s_from_apery(unit) == 0);

    CHECK(n_from_apery(apery_set(GeneratorSet({6, 11, 16, 21}))) == 17);
    CHECK(s_from_apery(apery_set(GeneratorSet({7, 9, 11}))) == 165);
}

TEST_CASE("apery power sums") {
    AperyTable t = apery_set(GeneratorSet({4, 7, 11}));
    CHECK(apery_power_sum(t, 1) == 42);
    CHECK(apery_power_sum(t, 2) == 686);
    CHECK(apery_power_sum(apery_set(GeneratorSet({1})), 1) == 0);
    CHECK_THROWS_AS(apery_power_sum(t, 3), InvalidParams);
}

TEST_CASE("weighted apery sums") {
    AperyTable t23 = apery_set(GeneratorSet({2, 3}));
    auto [mw, w] = weighted_apery_sums(t23, GaussianRational(2));
    CHECK(mw == GaussianRational(24));
    CHECK(w == GaussianRational(9));

    AperyTable unit = apery_set(GeneratorSet({1}));
    auto [mw1, w1] = weighted_apery_sums(unit, GaussianRational(7));
    CHECK(mw1 == GaussianRational(0));
    CHECK(w1 == GaussianRational(1));

    AperyTable t = apery_set(GeneratorSet({4, 7, 11}));
    auto [mw2, w2] = weighted_apery_sums(t, GaussianRational(1));
    CHECK(mw2 == GaussianRational(42));
    CHECK(w2 == GaussianRational(4));

    CHECK_THROWS_AS(weighted_apery_sums(t, GaussianRational(0)), LambdaDegenerate);
}

TEST_CASE("weighted gap sum via the table") {
    CHECK(weighted_sum_from_apery(apery_set(GeneratorSet({7, 9, 11})),
                                  GaussianRational(2)) ==
          GaussianRational(BigRational(BigInt("2160333442"))));
    CHECK(weighted_sum_from_apery(apery_set(GeneratorSet({6, 11, 16, 21})), kI) ==
          GaussianRational(BigRational(-20), BigRational(-22)));
    CHECK(weighted_sum_from_apery(apery_set(GeneratorSet({2, 3})),
                                  GaussianRational(2)) == GaussianRational(2));
    // NR(2,3) = {1}: weight 1/2 gives 1/2
    CHECK(weighted_sum_from_apery(apery_set(GeneratorSet({2, 3})),
                                  GaussianRational(BigRational(1, 2))) ==
          GaussianRational(BigRational(1, 2)));
}

TEST_CASE("degenerate lambdas are rejected") {
    AperyTable t = apery_set(GeneratorSet({4, 7, 11}));
    CHECK_THROWS_AS(weighted_sum_from_apery(t, GaussianRational(0)), LambdaDegenerate);
    CHECK_THROWS_AS(weighted_sum_from_apery(t, GaussianRational(1)), LambdaDegenerate);
    CHECK_THROWS_AS(weighted_sum_from_apery(t, GaussianRational(-1)), LambdaDegenerate);
    CHECK_THROWS_AS(weighted_sum_from_apery(t, kI), LambdaDegenerate);  // i^4 = 1
    // odd base admits -1
    AperyTable odd = apery_set(GeneratorSet({3, 5, 7}));
    CHECK_NOTHROW(weighted_sum_from_apery(odd, GaussianRational(-1)));
}

TEST_CASE("gap enumeration from the table") {
    CHECK(gaps_from_apery(apery_set(GeneratorSet({4, 7, 11}))) ==
          std::vector<std::uint64_t>{1, 2, 3, 5, 6, 9, 10, 13, 17});
    CHECK(gaps_from_apery(apery_set(GeneratorSet({1}))).empty());
}

namespace {

std::vector<std::uint64_t> random_coprime_set(std::mt19937_64& rng,
                                              std::uint64_t max_a1) {
    std::uint64_t a1 = 2 + rng() % (max_a1 - 1);
    std::vector<std::uint64_t> raw{a1};
    std::uint64_t extra = 1 + rng() % 4;
    for (std::uint64_t i = 0; i < extra; ++i) {
        raw.push_back(a1 + 1 + rng() % (3 * a1));
    }
    std::uint64_t g = 0;
    for (std::uint64_t v : raw) g = std::gcd(g, v);
    if (g != 1) raw.push_back(a1 + 1);
    return raw;
}

}  // namespace

TEST_CASE("engine agrees with the oracle on random sets") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        GeneratorSet gens(random_coprime_set(rng, 200));
        AperyTable table = apery_set(gens);
        GapReport truth = oracle_report(gens);
        CHECK(g_from_apery(table) == truth.g);
        CHECK(n_from_apery(table) == truth.n);
        CHECK(s_from_apery(table) == truth.s);
        CHECK(gaps_from_apery(table) == *truth.gaps);

        // table minimality against the representability bitmap
        RepresentabilityMap map = representability_map(gens);
        for (std::uint64_t i = 1; i < table.base; ++i) {
            std::uint64_t m = table.m[i];
            REQUIRE(m <= map.bound);
            CHECK(map.bits[m]);
            CHECK((m < table.base || !map.bits[m - table.base]));
        }
    }
}

TEST_CASE("weighted engine agrees with direct summation on random sets") {
    // small bases keep the exact lambda powers cheap; exponents reach a few
    // hundred at most
    std::mt19937_64 rng(777);
    const std::vector<GaussianRational> lambdas{
        GaussianRational(2), GaussianRational(BigRational(1, 2)), kI,
        GaussianRational(BigRational(-3, 2), BigRational(1, 2)),
        GaussianRational(-1)};
    for (int iter = 0; iter < 25; ++iter) {
        GeneratorSet gens(random_coprime_set(rng, 16));
        AperyTable table = apery_set(gens);
        for (const GaussianRational& lambda : lambdas) {
            if (pow(lambda, table.base).is_one()) continue;
            GapReport w = oracle_report(gens, lambda);
            CHECK(weighted_sum_from_apery(table, lambda) == *w.weighted);
        }
    }
}
