#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aucprobe/bigcount.hpp"
#include "aucprobe/rational.hpp"

namespace aucprobe {

/// Guesses interpreted as per-example probabilities P(Y_i=1 | guess_i).
/// Values must lie strictly inside (0, 1) and be pairwise distinct; exact
/// 0/1 would make the likelihood degenerate.
class ProbGuesses {
public:
    explicit ProbGuesses(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }

private:
    std::vector<double> probs_;
};

/// Optional restriction of the satisfier search to a known class split.
struct ClassCounts {
    std::size_t n0 = 0;
    std::size_t n1 = 0;
};

enum class PosteriorMethod { brute_force, dp };

/// Exact posterior over all labelings whose AUC against the guesses equals
/// the reported score: posterior[i] = P(Y_i=1 | guesses, c).
struct PosteriorResult {
    std::vector<double> posterior;
    ExactCount satisfying_count;
    double total_weight = 0.0;
    PosteriorMethod method = PosteriorMethod::brute_force;
};

/// Enumerates all 2^n labelings, keeps those with both classes present whose
/// exact AUC equals c, and sums the likelihood products. Capped at n <= 24.
/// Throws NoSatisfyingLabelingError when nothing matches.
PosteriorResult posterior_brute_force(const ProbGuesses& probs, const RationalScore& c,
                                      std::optional<ClassCounts> known_counts = std::nullopt);

/// Same result as posterior_brute_force, computed by a forward pass over the
/// examples in ascending rank order with states (negatives placed, correctly
/// ordered pairs so far). Pseudo-polynomial: O(n^2 * maxpairs) per pass, one
/// unconditioned pass plus one pass per index with that label clamped to 1.
PosteriorResult posterior_dp(const ProbGuesses& probs, const RationalScore& c,
                             std::optional<ClassCounts> known_counts = std::nullopt);

/// Exact number of binary labelings (both classes present) of n rank-ordered
/// examples achieving AUC exactly c. Depends only on n and c, since the AUC
/// sees nothing but the rank order.
ExactCount count_satisfying(std::size_t n, const RationalScore& c);

} // namespace aucprobe
