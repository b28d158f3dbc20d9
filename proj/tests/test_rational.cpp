#include <doctest.h>

#include <stdexcept>

#include "aucprobe/rational.hpp"

using aucprobe::RationalScore;

TEST_CASE("reduction preserves value and divides by the gcd") {
    const RationalScore score(6, 8);
    const auto reduced = score.reduced();
    CHECK(reduced.numerator() == 3);
    CHECK(reduced.denominator() == 4);
    CHECK(score == reduced);
    CHECK(score.str() == "3/4");
}

TEST_CASE("equality is cross-multiplied, not representation-based") {
    CHECK(RationalScore(1, 3) == RationalScore(2, 6));
    CHECK(RationalScore(1, 3) != RationalScore(333333333, 1000000000));
    CHECK(RationalScore(0, 7) == RationalScore(0, 1));
}

TEST_CASE("ordering") {
    CHECK(RationalScore(1, 2) < RationalScore(2, 3));
    CHECK(RationalScore(197, 200) > RationalScore(49, 50));
    CHECK(RationalScore(3, 4) <= RationalScore(6, 8));
    CHECK(RationalScore(3, 4) >= RationalScore(6, 8));
}

TEST_CASE("equality survives 64-bit cross products") {
    // Large equal values whose cross products overflow 64 bits.
    const std::uint64_t big = 3'000'000'000ull;
    CHECK(RationalScore(big, 2 * big) == RationalScore(1, 2));
    CHECK(RationalScore(big - 1, 2 * big) < RationalScore(1, 2));
}

TEST_CASE("float view is a single division") {
    CHECK(RationalScore(3, 4).value() == 0.75);
    CHECK(RationalScore(1, 3).value() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("parse accepts fractions and bare integers") {
    auto score = RationalScore::parse("197/200");
    REQUIRE(score.has_value());
    CHECK(score->numerator() == 197);
    CHECK(score->denominator() == 200);

    auto one = RationalScore::parse("1");
    REQUIRE(one.has_value());
    CHECK(*one == RationalScore(1, 1));

    CHECK(RationalScore::parse("5/4").has_value());  // out-of-range targets parse fine
}

TEST_CASE("parse rejects decimals and junk") {
    CHECK_FALSE(RationalScore::parse("0.985").has_value());
    CHECK_FALSE(RationalScore::parse("3/4.0").has_value());
    CHECK_FALSE(RationalScore::parse("-1/2").has_value());
    CHECK_FALSE(RationalScore::parse("1/0").has_value());
    CHECK_FALSE(RationalScore::parse("").has_value());
    CHECK_FALSE(RationalScore::parse("a/b").has_value());
    CHECK_FALSE(RationalScore::parse("1e-3").has_value());
}

TEST_CASE("zero denominator is rejected at construction") {
    CHECK_THROWS_AS(RationalScore(1, 0), std::invalid_argument);
}
