#include "aucprobe/auc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aucprobe/errors.hpp"

namespace aucprobe {

Guesses::Guesses(std::vector<double> scores) : scores_(std::move(scores)) {
    if (scores_.size() < 2) {
        throw std::invalid_argument("Guesses: need at least 2 scores");
    }
    for (double s : scores_) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("Guesses: scores must be finite");
        }
    }
    std::vector<double> sorted = scores_;
    std::sort(sorted.begin(), sorted.end());
    all_distinct_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Labeling::Labeling(std::vector<std::uint8_t> labels) : labels_(std::move(labels)), n0_(0), n1_(0) {
    if (labels_.size() < 2) {
        throw std::invalid_argument("Labeling: need at least 2 labels");
    }
    for (std::uint8_t y : labels_) {
        if (y > 1) {
            throw std::invalid_argument("Labeling: entries must be 0 or 1");
        }
        y ? ++n1_ : ++n0_;
    }
}

Labeling Labeling::from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    }
    return Labeling(std::move(labels));
}

namespace {

void check_lengths(const Labeling& labels, const Guesses& guesses) {
    if (labels.size() != guesses.size()) {
        throw LengthMismatchError("labels and guesses differ in length");
    }
}

void check_defined(const Labeling& labels) {
    if (!labels.both_classes_present()) {
        throw UndefinedAucError("AUC undefined: all examples share one label");
    }
}

} // namespace

RationalScore auc_exact(const Labeling& labels, const Guesses& guesses) {
    check_lengths(labels, guesses);
    check_defined(labels);
    if (!guesses.all_distinct()) {
        throw TiedGuessesError("auc_exact requires pairwise distinct guesses");
    }

    // Walk scores ascending; each positive is correctly ordered against every
    // negative already seen.
    const auto order = rank_order(guesses);
    std::uint64_t correct = 0;
    std::uint64_t negatives_seen = 0;
    for (std::size_t idx : order) {
        if (labels.labels()[idx]) {
            correct += negatives_seen;
        } else {
            ++negatives_seen;
        }
    }
    const std::uint64_t total =
        static_cast<std::uint64_t>(labels.num_negative()) * labels.num_positive();
    return RationalScore(correct, total);
}

RationalScore auc_with_ties(const Labeling& labels, const Guesses& guesses) {
    check_lengths(labels, guesses);
    check_defined(labels);

    std::vector<std::size_t> order(guesses.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double sa = guesses.scores()[a];
        const double sb = guesses.scores()[b];
        return sa != sb ? sa < sb : a < b;
    });

    // Group equal scores: pairs across groups count 2 (in doubled units),
    // cross-class pairs within a group count 1.
    std::uint64_t doubled = 0;
    std::uint64_t negatives_before = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        std::uint64_t group_neg = 0;
        std::uint64_t group_pos = 0;
        while (j < order.size() &&
               guesses.scores()[order[j]] == guesses.scores()[order[i]]) {
            labels.labels()[order[j]] ? ++group_pos : ++group_neg;
            ++j;
        }
        doubled += group_pos * (2 * negatives_before + group_neg);
        negatives_before += group_neg;
        i = j;
    }
    const std::uint64_t total =
        2 * static_cast<std::uint64_t>(labels.num_negative()) * labels.num_positive();
    return RationalScore(doubled, total);
}

std::vector<std::size_t> rank_order(const Guesses& guesses) {
    if (!guesses.all_distinct()) {
        throw TiedGuessesError("rank_order requires pairwise distinct guesses");
    }
    std::vector<std::size_t> order(guesses.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double sa = guesses.scores()[a];
        const double sb = guesses.scores()[b];
        return sa != sb ? sa < sb : a < b;
    });
    return order;
}

} // namespace aucprobe
