#include <doctest.h>

#include <vector>

#include "aucprobe/errors.hpp"
#include "aucprobe/oracle.hpp"
#include "test_helpers.hpp"

using namespace aucprobe;

namespace {

const std::vector<std::uint8_t> kHidden{1, 0, 1, 0};
const std::vector<double> kQuery{0.5, 0.6, 0.9, 0.4};

} // namespace

TEST_CASE("exact mode reports the fraction and its float view") {
    Oracle oracle(Labeling(kHidden), OracleConfig{}, 0);
    const auto response = oracle.query(Guesses(kQuery));
    REQUIRE(response.score_fraction.has_value());
    CHECK(*response.score_fraction == RationalScore(3, 4));
    CHECK(response.score_float == response.score_fraction->value());
    CHECK_FALSE(response.queries_remaining.has_value());
}

TEST_CASE("single-class hidden labels are rejected at construction") {
    CHECK_THROWS_AS(Oracle(Labeling({1, 1, 1, 1}), OracleConfig{}, 0), UndefinedAucError);
}

TEST_CASE("budget counts down and then refuses") {
    OracleConfig config;
    config.budget = 2;
    Oracle oracle(Labeling(kHidden), config, 0);
    CHECK(oracle.queries_remaining() == 2);
    CHECK(oracle.query(Guesses(kQuery)).queries_remaining == 1);
    CHECK(oracle.query(Guesses(kQuery)).queries_remaining == 0);
    CHECK_THROWS_AS(oracle.query(Guesses(kQuery)), BudgetExhaustedError);
    CHECK(oracle.queries_remaining() == 0);
}

TEST_CASE("failed queries do not consume budget") {
    OracleConfig config;
    config.budget = 1;
    Oracle oracle(Labeling(kHidden), config, 0);
    CHECK_THROWS_AS(oracle.query(Guesses({0.5, 0.5, 0.9, 0.4})), TiedGuessesError);
    CHECK_THROWS_AS(oracle.query(Guesses({0.1, 0.2})), LengthMismatchError);
    CHECK(oracle.queries_remaining() == 1);
}

TEST_CASE("round-half-up at the configured decimal") {
    OracleConfig config;
    config.round_decimals = 1;
    config.report_exact_fraction = false;
    Oracle oracle(Labeling(kHidden), config, 0);
    const auto response = oracle.query(Guesses(kQuery));
    CHECK(response.score_float == 0.8);  // round(0.75, 1) half-up
    CHECK_FALSE(response.score_fraction.has_value());

    OracleConfig four;
    four.round_decimals = 4;
    four.report_exact_fraction = false;
    Oracle oracle4(Labeling({0, 1, 0, 0}), four, 0);
    // 2/3 -> 0.6667
    CHECK(oracle4.query(Guesses(kQuery)).score_float == doctest::Approx(0.6667).epsilon(1e-12));
}

TEST_CASE("noise is seeded, deterministic, and clamped") {
    OracleConfig config;
    config.noise_stddev = 0.5;
    config.report_exact_fraction = false;

    Oracle a(Labeling(kHidden), config, 42);
    Oracle b(Labeling(kHidden), config, 42);
    Oracle c(Labeling(kHidden), config, 43);
    bool any_diff = false;
    for (int i = 0; i < 20; ++i) {
        const auto ra = a.query(Guesses(kQuery));
        const auto rb = b.query(Guesses(kQuery));
        const auto rc = c.query(Guesses(kQuery));
        CHECK(ra.score_float == rb.score_float);
        CHECK(ra.score_float >= 0.0);
        CHECK(ra.score_float <= 1.0);
        if (ra.score_float != rc.score_float) any_diff = true;
    }
    CHECK(any_diff);  // different seeds give a different stream
}

TEST_CASE("noise-free unrounded score is bit-identical to the fraction view") {
    Xoshiro256pp rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng.next_u64() % 10;
        std::uint64_t mask;
        do {
            mask = rng.next_u64() & ((1ull << n) - 1);
        } while (mask == 0 || mask == (1ull << n) - 1);
        Oracle oracle(Labeling(reference::mask_to_labels(mask, n)), OracleConfig{},
                      rng.next_u64());
        const auto guesses = reference::random_distinct_guesses(rng, n);
        const auto response = oracle.query(Guesses(guesses));
        CHECK(response.score_float == response.score_fraction->value());
    }
}

TEST_CASE("config invariants") {
    OracleConfig noisy_exact;
    noisy_exact.noise_stddev = 0.1;
    CHECK_THROWS_AS(noisy_exact.validate(), std::invalid_argument);

    OracleConfig rounded_exact;
    rounded_exact.round_decimals = 2;
    CHECK_THROWS_AS(rounded_exact.validate(), std::invalid_argument);

    OracleConfig zero_budget;
    zero_budget.budget = 0;
    CHECK_THROWS_AS(zero_budget.validate(), std::invalid_argument);

    OracleConfig negative_noise;
    negative_noise.noise_stddev = -0.1;
    negative_noise.report_exact_fraction = false;
    CHECK_THROWS_AS(negative_noise.validate(), std::invalid_argument);
}

TEST_CASE("identical seeds and query sequences give identical responses") {
    OracleConfig config;
    config.noise_stddev = 0.01;
    config.report_exact_fraction = false;
    config.budget = 5;

    Xoshiro256pp rng(99);
    std::vector<std::vector<double>> queries;
    for (int i = 0; i < 5; ++i) queries.push_back(reference::random_distinct_guesses(rng, 4));

    Oracle a(Labeling(kHidden), config, 1234);
    Oracle b(Labeling(kHidden), config, 1234);
    for (const auto& q : queries) {
        const auto ra = a.query(Guesses(q));
        const auto rb = b.query(Guesses(q));
        CHECK(ra.score_float == rb.score_float);
        CHECK(ra.queries_remaining == rb.queries_remaining);
    }
}
