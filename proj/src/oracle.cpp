#include "aucprobe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aucprobe/errors.hpp"

namespace aucprobe {

void OracleConfig::validate() const {
    if (noise_stddev < 0.0 || !std::isfinite(noise_stddev)) {
        throw std::invalid_argument("OracleConfig: noise_stddev must be finite and >= 0");
    }
    if ((noise_stddev > 0.0 || round_decimals.has_value()) && report_exact_fraction) {
        throw std::invalid_argument(
            "OracleConfig: a noisy or rounded oracle cannot report exact fractions");
    }
    if (budget && *budget == 0) {
        throw std::invalid_argument("OracleConfig: budget must be positive when set");
    }
}

Oracle::Oracle(Labeling labels, OracleConfig config, std::uint64_t seed)
    : labels_(std::move(labels)), config_(config), rng_(seed), remaining_(config.budget) {
    config_.validate();
    if (!labels_.both_classes_present()) {
        throw UndefinedAucError("Oracle: hidden labels are single-class, AUC undefined");
    }
}

OracleResponse Oracle::query(const Guesses& guesses) {
    if (remaining_ && *remaining_ == 0) {
        throw BudgetExhaustedError("Oracle: query budget exhausted");
    }
    if (guesses.size() != labels_.size()) {
        throw LengthMismatchError("Oracle: guesses length does not match test set");
    }

    const RationalScore fraction = auc_exact(labels_, guesses);
    double score = fraction.value();
    if (config_.round_decimals) {
        // Round-half-up at the configured decimal place, applied before noise.
        const double p = std::pow(10.0, static_cast<double>(*config_.round_decimals));
        score = std::floor(score * p + 0.5) / p;
    }
    if (config_.noise_stddev > 0.0) {
        score += config_.noise_stddev * rng_.next_normal();
        score = std::clamp(score, 0.0, 1.0);
    }

    if (remaining_) {
        --*remaining_;
    }

    OracleResponse response;
    response.score_float = score;
    if (config_.report_exact_fraction) {
        response.score_fraction = fraction;
    }
    response.queries_remaining = remaining_;
    return response;
}

} // namespace aucprobe
