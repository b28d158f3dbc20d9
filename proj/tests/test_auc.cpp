#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "aucprobe/auc.hpp"
#include "aucprobe/errors.hpp"
#include "aucprobe/rng.hpp"
#include "test_helpers.hpp"

using namespace aucprobe;

namespace {

const std::vector<double> kExampleGuesses{0.5, 0.6, 0.9, 0.4};

RationalScore auc_of(std::vector<std::uint8_t> labels, std::vector<double> guesses) {
    return auc_exact(Labeling(std::move(labels)), Guesses(std::move(guesses)));
}

} // namespace

TEST_CASE("four-example worked values") {
    CHECK(auc_of({1, 0, 1, 0}, kExampleGuesses) == RationalScore(3, 4));
    CHECK(auc_of({0, 1, 0, 0}, kExampleGuesses) == RationalScore(2, 3));
    CHECK(auc_of({0, 0, 0, 1}, kExampleGuesses) == RationalScore(0, 3));
    CHECK(auc_of({0, 1}, {0.0, 1.0}) == RationalScore(1, 1));
}

TEST_CASE("unreduced fraction matches the definition") {
    // (correct pairs, n0*n1) arrives unreduced.
    const auto score = auc_of({1, 0, 1, 0}, kExampleGuesses);
    CHECK(score.numerator() == 3);
    CHECK(score.denominator() == 4);
}

TEST_CASE("single-class labelings have no AUC") {
    CHECK_THROWS_AS(auc_of({1, 1, 1, 1}, kExampleGuesses), UndefinedAucError);
    CHECK_THROWS_AS(auc_of({0, 0, 0, 0}, kExampleGuesses), UndefinedAucError);
}

TEST_CASE("tied guesses are rejected without tolerance") {
    CHECK_THROWS_AS(auc_of({0, 1, 0, 1}, {0.5, 0.5, 0.9, 0.4}), TiedGuessesError);
    // Near-misses are distinct: no epsilon smudging.
    const double eps = std::nextafter(0.5, 1.0);
    CHECK_NOTHROW(auc_of({0, 1, 0, 1}, {0.5, eps, 0.9, 0.4}));
}

TEST_CASE("length mismatch") {
    CHECK_THROWS_AS(auc_exact(Labeling({0, 1, 1}), Guesses(kExampleGuesses)),
                    LengthMismatchError);
}

TEST_CASE("tie-aware scoring") {
    CHECK(auc_with_ties(Labeling({0, 1}), Guesses({0.5, 0.5})) == RationalScore(1, 2));
    // No ties: agrees with the strict version.
    CHECK(auc_with_ties(Labeling({1, 0, 1, 0}), Guesses(kExampleGuesses)) ==
          RationalScore(3, 4));
    // Two tie groups: (1/2 + 1 + 0 + 1/2) of 4 pairs.
    CHECK(auc_with_ties(Labeling({0, 1, 0, 1}), Guesses({1.0, 1.0, 2.0, 2.0})) ==
          RationalScore(1, 2));
    CHECK_THROWS_AS(auc_with_ties(Labeling({1, 1}), Guesses({0.1, 0.2})), UndefinedAucError);
}

TEST_CASE("rank_order") {
    const auto order = rank_order(Guesses(kExampleGuesses));
    CHECK(order == std::vector<std::size_t>{3, 0, 1, 2});
    CHECK(rank_order(Guesses({1.0, 2.0, 3.0})) == std::vector<std::size_t>{0, 1, 2});
    CHECK(rank_order(Guesses({3.0, 2.0, 1.0})) == std::vector<std::size_t>{2, 1, 0});
    CHECK_THROWS_AS(rank_order(Guesses({1.0, 1.0, 2.0})), TiedGuessesError);
}

TEST_CASE("guesses validation") {
    CHECK_THROWS_AS(Guesses({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Guesses({1.0, std::nan("")}), std::invalid_argument);
    CHECK(Guesses({1.0, 1.0}).all_distinct() == false);
    CHECK(Guesses({1.0, 2.0}).all_distinct() == true);
}

TEST_CASE("labeling validation and counts") {
    const Labeling labeling({1, 0, 1, 0});
    CHECK(labeling.num_negative() == 2);
    CHECK(labeling.num_positive() == 2);
    CHECK_THROWS_AS(Labeling({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Labeling({1}), std::invalid_argument);
    CHECK(Labeling::from_mask(0b0101, 4) == Labeling({1, 0, 1, 0}));
}

TEST_CASE("property: brute-force pair loop agrees for all small labelings") {
    Xoshiro256pp rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;  // up to 8
        const auto guesses = reference::random_distinct_guesses(rng, n);
        for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
            const auto labels = reference::mask_to_labels(mask, n);
            const auto [doubled, doubled_total] = reference::auc_pair_loop(labels, guesses);
            const auto score = auc_of(labels, guesses);
            CHECK(score == RationalScore(doubled / 2, doubled_total / 2));
        }
    }
}

TEST_CASE("property: AUC is invariant under strictly increasing transforms") {
    Xoshiro256pp rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 15;
        const auto guesses = reference::random_distinct_guesses(rng, n);
        std::uint64_t mask = 0;
        while (true) {
            mask = rng.next_u64() & ((1ull << n) - 1);
            const auto pop = static_cast<std::size_t>(std::popcount(mask));
            if (pop > 0 && pop < n) break;
        }
        const auto labels = reference::mask_to_labels(mask, n);

        // Random monotone piecewise-linear transform: positive slopes between
        // knots at the sorted guess values.
        auto sorted = guesses;
        std::sort(sorted.begin(), sorted.end());
        std::vector<double> transformed_knots(n);
        double level = -3.0 + rng.next_double();
        for (std::size_t i = 0; i < n; ++i) {
            level += 0.05 + rng.next_double();  // strictly increasing
            transformed_knots[i] = level;
        }
        std::vector<double> transformed(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), guesses[i]) - sorted.begin());
            transformed[i] = transformed_knots[pos];
        }

        CHECK(auc_of(labels, guesses) == auc_of(labels, transformed));
    }
}

TEST_CASE("property: complementing labels flips the AUC") {
    Xoshiro256pp rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 15;
        const auto guesses = reference::random_distinct_guesses(rng, n);
        std::uint64_t mask = 0;
        while (true) {
            mask = rng.next_u64() & ((1ull << n) - 1);
            const auto pop = static_cast<std::size_t>(std::popcount(mask));
            if (pop > 0 && pop < n) break;
        }
        const auto labels = reference::mask_to_labels(mask, n);
        auto flipped = labels;
        for (auto& y : flipped) y ^= 1;

        const auto score = auc_of(labels, guesses);
        const auto mirror = auc_of(flipped, guesses);
        CHECK(mirror == RationalScore(score.denominator() - score.numerator(),
                                      score.denominator()));
    }
}

TEST_CASE("property: tie-aware equals strict on tie-free inputs") {
    Xoshiro256pp rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 10;
        const auto guesses = reference::random_distinct_guesses(rng, n);
        std::uint64_t mask = 0;
        while (true) {
            mask = rng.next_u64() & ((1ull << n) - 1);
            const auto pop = static_cast<std::size_t>(std::popcount(mask));
            if (pop > 0 && pop < n) break;
        }
        const Labeling labels(reference::mask_to_labels(mask, n));
        const Guesses g(guesses);
        CHECK(auc_with_ties(labels, g) == auc_exact(labels, g));
    }
}

TEST_CASE("property: bounds, and AUC=1 iff the classes separate") {
    Xoshiro256pp rng(15);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 10;
        const auto guesses = reference::random_distinct_guesses(rng, n);
        std::uint64_t mask = 0;
        while (true) {
            mask = rng.next_u64() & ((1ull << n) - 1);
            const auto pop = static_cast<std::size_t>(std::popcount(mask));
            if (pop > 0 && pop < n) break;
        }
        const auto labels = reference::mask_to_labels(mask, n);
        const auto score = auc_of(labels, guesses);
        CHECK(score.numerator() <= score.denominator());

        double max_neg = -1e300, min_pos = 1e300;
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i]) min_pos = std::min(min_pos, guesses[i]);
            else max_neg = std::max(max_neg, guesses[i]);
        }
        const bool separated = max_neg < min_pos;
        CHECK((score == RationalScore(1, 1)) == separated);
    }
}
