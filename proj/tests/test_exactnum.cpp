#include <doctest.h>

#include <random>

#include "frobkit/exactnum.hpp"

using namespace frobkit;

namespace {

BigRational rand_rational(std::mt19937_64& rng) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 199) - 99;
    std::int64_t den = static_cast<std::int64_t>(rng() % 30) + 1;
    return BigRational(num, den);
}

GaussianRational rand_gaussian(std::mt19937_64& rng) {
    return {rand_rational(rng), rand_rational(rng)};
}

GaussianRational rand_nonzero(std::mt19937_64& rng) {
    GaussianRational x = rand_gaussian(rng);
    while (x.is_zero()) {
        x = rand_gaussian(rng);
    }
    return x;
}

const GaussianRational kOne{1};
const GaussianRational kI{BigRational(0), BigRational(1)};

}  // namespace

TEST_CASE("gaussian arithmetic basics") {
    CHECK(kI * kI == GaussianRational(-1));
    CHECK(GaussianRational(BigRational(3), BigRational(4)) *
              GaussianRational(BigRational(3), BigRational(-4)) ==
          GaussianRational(25));
    CHECK(GaussianRational(1) / GaussianRational(2) ==
          GaussianRational(BigRational(1, 2)));
    CHECK(GaussianRational(BigRational(1), BigRational(1)) +
              GaussianRational(BigRational(2), BigRational(-3)) ==
          GaussianRational(BigRational(3), BigRational(-2)));
    CHECK(-kI == GaussianRational(BigRational(0), BigRational(-1)));
}

TEST_CASE("gaussian division by zero") {
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
}

TEST_CASE("gaussian pow") {
    CHECK(pow(kI, 2) == GaussianRational(-1));
    CHECK(pow(GaussianRational(2), 26) == GaussianRational(67108864));
    CHECK(pow(GaussianRational(BigRational(1, 2)), 3) ==
          GaussianRational(BigRational(1, 8)));
    CHECK(pow(GaussianRational(5), 0) == kOne);
    CHECK(pow(GaussianRational(0), 5) == GaussianRational(0));
    CHECK_THROWS_AS(pow(GaussianRational(0), 0), IndeterminateForm);
}

TEST_CASE("parse basics") {
    CHECK(parse_gaussian("2") == GaussianRational(2));
    CHECK(parse_gaussian("i") == kI);
    CHECK(parse_gaussian("-i") == -kI);
    CHECK(parse_gaussian("+5") == GaussianRational(5));
    CHECK(parse_gaussian("-3/2+1/2i") ==
          GaussianRational(BigRational(-3, 2), BigRational(1, 2)));
    CHECK(parse_gaussian("3/4i") == GaussianRational(BigRational(0), BigRational(3, 4)));
    CHECK(parse_gaussian("2-i") == GaussianRational(BigRational(2), BigRational(-1)));
    CHECK(parse_gaussian("0+1i") == kI);
    CHECK(parse_gaussian("10/4") == GaussianRational(BigRational(5, 2)));
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const char* text) {
        try {
            parse_gaussian(text);
        } catch (const ParseError& e) {
            return e.position;
        }
        FAIL("expected ParseError for ", text);
        return std::size_t{0};
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("abc") == 0);
    CHECK(pos_of("2+") == 2);
    CHECK(pos_of("1/0") == 2);
    CHECK(pos_of("2 + 3i") == 1);
    CHECK(pos_of("2+3") == 3);    // missing trailing i
    CHECK(pos_of("2i+3") == 2);   // imaginary part must come last
    CHECK(pos_of("2+3i4") == 4);  // trailing input
    CHECK(pos_of("--2") == 1);
}

TEST_CASE("canonical formatting") {
    CHECK(to_string(GaussianRational(2)) == "2");
    CHECK(to_string(kI) == "0+1i");
    CHECK(to_string(GaussianRational(BigRational(-3, 2), BigRational(1, 2))) ==
          "-3/2+1/2i");
    CHECK(to_string(GaussianRational(BigRational(1, 2), BigRational(-1))) ==
          "1/2-1i");
    CHECK(to_string(BigRational(10, 4)) == "5/2");
    CHECK(to_string(BigRational(-7)) == "-7");
}

TEST_CASE("parse . format = identity on random values") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10000; ++i) {
        GaussianRational x = rand_gaussian(rng);
        CHECK(parse_gaussian(to_string(x)) == x);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        GaussianRational x = rand_gaussian(rng);
        GaussianRational y = rand_gaussian(rng);
        GaussianRational z = rand_gaussian(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == GaussianRational(0));
        if (!x.is_zero()) {
            CHECK(x * (kOne / x) == kOne);
        }
    }
}

TEST_CASE("pow is a homomorphism in the exponent") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        GaussianRational x = rand_nonzero(rng);
        std::uint64_t a = rng() % 65;
        std::uint64_t b = rng() % 65;
        CHECK(pow(x, a + b) == pow(x, a) * pow(x, b));
    }
}

TEST_CASE("bigint round-trips through decimal strings") {
    const char* text = "-123456789012345678901234567890";
    CHECK(BigInt(text).str() == text);
    CHECK(BigInt("0").str() == "0");
    CHECK(BigInt(-0) == BigInt(0));  // canonical zero
}

TEST_CASE("require_integer") {
    CHECK(require_integer(BigRational(14, 2), "test") == 7);
    CHECK(require_integer(BigRational(0), "test") == 0);
    CHECK_THROWS_AS(require_integer(BigRational(7, 2), "test"),
                    IntegralityViolation);
    CHECK(require_nonnegative_integer(BigRational(4), "test") == 4);
    CHECK_THROWS_AS(require_nonnegative_integer(BigRational(-3), "test"),
                    IntegralityViolation);
}
