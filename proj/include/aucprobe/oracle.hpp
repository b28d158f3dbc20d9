#pragma once

#include <cstdint>
#include <optional>

#include "aucprobe/auc.hpp"
#include "aucprobe/rng.hpp"

namespace aucprobe {

/// Hardening knobs for the simulated contest oracle. The default
/// configuration is the ideal oracle: exact fraction, no noise, no budget.
struct OracleConfig {
    std::optional<std::uint64_t> budget;      // max successful queries
    double noise_stddev = 0.0;                // additive Gaussian on the float score
    std::optional<unsigned> round_decimals;   // round-half-up before noise
    bool report_exact_fraction = true;

    /// Throws std::invalid_argument on inconsistent settings: a perturbed
    /// score (noise or rounding) must not be reported as an exact fraction.
    void validate() const;
};

struct OracleResponse {
    double score_float = 0.0;
    std::optional<RationalScore> score_fraction;
    std::optional<std::uint64_t> queries_remaining;
};

/// Contest oracle holding hidden ground-truth labels. Scores submitted
/// guesses with the exact AUC over the full test set, then applies rounding
/// and noise to the float view per config. Stateful (budget, noise stream);
/// callers must serialize concurrent queries.
class Oracle {
public:
    /// Throws UndefinedAucError if the hidden labels are single-class.
    Oracle(Labeling labels, OracleConfig config, std::uint64_t seed);

    /// Throws BudgetExhaustedError, LengthMismatchError, TiedGuessesError.
    /// Only successful queries consume budget.
    OracleResponse query(const Guesses& guesses);

    std::size_t size() const { return labels_.size(); }
    std::optional<std::uint64_t> queries_remaining() const { return remaining_; }

private:
    Labeling labels_;
    OracleConfig config_;
    Xoshiro256pp rng_;
    std::optional<std::uint64_t> remaining_;
};

} // namespace aucprobe
