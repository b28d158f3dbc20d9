#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aucprobe/rng.hpp"

// Reference implementations kept deliberately independent of the library's
// computation paths: literal double loops over example pairs, straight from
// the pairwise definition of the AUC.
namespace reference {

// (doubled correct-pair count, doubled total pairs): a strictly ordered pair
// counts 2, a tied pair counts 1.
inline std::pair<std::uint64_t, std::uint64_t> auc_pair_loop(
    const std::vector<std::uint8_t>& labels, const std::vector<double>& guesses) {
    std::uint64_t doubled_correct = 0;
    std::uint64_t n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] ? ++n1 : ++n0;
        if (labels[i]) continue;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (!labels[j]) continue;
            if (guesses[i] < guesses[j]) doubled_correct += 2;
            else if (guesses[i] == guesses[j]) doubled_correct += 1;
        }
    }
    return {doubled_correct, 2 * n0 * n1};
}

// Correct-pair count for distinct guesses (no ties possible).
inline std::uint64_t correct_pairs(const std::vector<std::uint8_t>& labels,
                                   const std::vector<double>& guesses) {
    return auc_pair_loop(labels, guesses).first / 2;
}

inline std::vector<double> random_distinct_guesses(aucprobe::Xoshiro256pp& rng,
                                                   std::size_t n) {
    std::vector<double> guesses(n);
    for (std::size_t i = 0; i < n; ++i) {
        // A fresh uniform plus an index-scaled offset; collisions are
        // effectively impossible, and the offset breaks any that occur.
        guesses[i] = rng.next_double() + static_cast<double>(i) * 1e-9;
    }
    return guesses;
}

inline std::vector<std::uint8_t> mask_to_labels(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    }
    return labels;
}

} // namespace reference
