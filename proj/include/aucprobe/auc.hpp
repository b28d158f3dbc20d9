#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aucprobe/rational.hpp"

namespace aucprobe {

/// A contestant's real-valued scores for the test examples.
class Guesses {
public:
    /// Requires at least 2 finite scores.
    explicit Guesses(std::vector<double> scores);

    const std::vector<double>& scores() const { return scores_; }
    std::size_t size() const { return scores_.size(); }

    /// True iff all scores are pairwise distinct (exact equality, no tolerance).
    bool all_distinct() const { return all_distinct_; }

private:
    std::vector<double> scores_;
    bool all_distinct_;
};

/// A binary ground-truth assignment with cached class counts.
class Labeling {
public:
    /// Entries must be 0 or 1; length must be at least 2.
    explicit Labeling(std::vector<std::uint8_t> labels);

    /// Labeling of length n from the low n bits of `mask` (bit i = label of
    /// example i). Handy for exhaustive enumeration.
    static Labeling from_mask(std::uint64_t mask, std::size_t n);

    const std::vector<std::uint8_t>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t num_negative() const { return n0_; }
    std::size_t num_positive() const { return n1_; }
    bool both_classes_present() const { return n0_ > 0 && n1_ > 0; }

    bool operator==(const Labeling& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::uint8_t> labels_;
    std::size_t n0_;
    std::size_t n1_;
};

/// Exact AUC: (#correctly ordered (negative, positive) pairs) / (n0*n1).
/// Requires distinct guesses and both classes present.
/// Throws UndefinedAucError, TiedGuessesError, LengthMismatchError.
RationalScore auc_exact(const Labeling& labels, const Guesses& guesses);

/// Tie-aware AUC: ties count one half. Numerator and denominator are doubled
/// so the result stays an exact integer fraction over 2*n0*n1.
RationalScore auc_with_ties(const Labeling& labels, const Guesses& guesses);

/// Indices sorted by ascending score. Requires distinct scores; determinism
/// is nevertheless guaranteed by sorting on (score, index).
std::vector<std::size_t> rank_order(const Guesses& guesses);

} // namespace aucprobe
