#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aucprobe/bigcount.hpp"

namespace aucprobe {

/// Synthetic logistic world: true weights, a labeled training set, and a
/// labeled test set (hidden from the attacker's side of the protocol).
struct World {
    std::vector<double> theta_true;
    std::vector<std::vector<double>> train_x;
    std::vector<std::uint8_t> train_y;
    std::vector<std::vector<double>> test_x;
    std::vector<std::uint8_t> test_y;
    bool resampled = false;  // test set was redrawn to get both classes
};

/// theta and all feature vectors i.i.d. standard normal; labels Bernoulli of
/// the sigmoid. The test set is redrawn (up to 1000 attempts) until both
/// classes are present. forced_theta substitutes the true weights, for tests.
World generate_world(std::size_t m, std::size_t n_test, std::size_t k_train,
                     std::uint64_t seed,
                     std::optional<std::vector<double>> forced_theta = std::nullopt);

double sigmoid(double z);

/// Regularized negative log-likelihood and its gradient; no intercept term.
double logistic_objective(const std::vector<std::vector<double>>& x,
                          const std::vector<std::uint8_t>& y,
                          const std::vector<double>& theta, double l2_reg);
std::vector<double> logistic_gradient(const std::vector<std::vector<double>>& x,
                                      const std::vector<std::uint8_t>& y,
                                      const std::vector<double>& theta, double l2_reg);

struct TrainResult {
    std::vector<double> theta;
    bool converged = false;
    std::size_t iterations = 0;
    double grad_norm = 0.0;
};

/// Full-batch gradient descent with backtracking line search, iteration cap
/// 10000, gradient-norm tolerance 1e-8. The objective is strictly convex for
/// l2_reg > 0; on cap overrun the best iterate is returned with
/// converged=false.
TrainResult train_logistic(const std::vector<std::vector<double>>& x,
                           const std::vector<std::uint8_t>& y, double l2_reg);

/// Deterministic tie-breaking for resubmitted posteriors: adds i*eps with eps
/// scaled below the smallest nonzero gap, so oracle distinctness holds and
/// strictly-unequal values never reorder. Falls back to rank-space guesses
/// (sort by (value, index)) in the degenerate case where the additive jitter
/// cannot separate ties.
std::vector<double> jitter_for_resubmission(const std::vector<double>& posterior);

struct SimConfig {
    std::size_t n_test = 16;
    std::vector<std::size_t> m_values = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    std::vector<std::size_t> k_values = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                         11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
    std::size_t runs_per_cell = 50;
    double l2_reg = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> bin_edges = default_bin_edges();

    static std::vector<double> default_bin_edges();  // 0.00, 0.05, ..., 1.00
    void validate() const;
};

struct SimRunRecord {
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t run = 0;
    double initial_auc = 0.0;  // C
    double post_auc = 0.0;     // C'
    double delta = 0.0;        // C' - C
    ExactCount satisfying_count;
    bool degenerate = false;
};

/// One full protocol round on a fresh world: submit sigmoid guesses, receive
/// the exact AUC, compute the posterior over all satisfying labelings (DP),
/// resubmit the tie-broken posterior, receive the updated AUC.
/// Per-cell seed: derive_seed(config.seed, m, k, run).
SimRunRecord run_attack2_trial(std::size_t m, std::size_t k, std::size_t run,
                               const SimConfig& config);

/// The full (m, k, run) sweep, in deterministic cell order.
std::vector<SimRunRecord> run_sweep(const SimConfig& config);

struct BinStat {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    double mean_delta = 0.0;
    double stderr_delta = 0.0;
};

/// Bins records by initial AUC into [lo, hi) intervals (last bin closed).
/// Throws std::invalid_argument on empty input or non-increasing edges.
std::vector<BinStat> aggregate(const std::vector<SimRunRecord>& records,
                               const std::vector<double>& edges);

/// Mean delta over records with initial AUC in [lo, hi); nullopt when none.
std::optional<double> mean_delta_in_range(const std::vector<SimRunRecord>& records,
                                          double lo, double hi);

/// Byte-stable emitters (shortest round-trip float formatting).
std::string records_to_csv(const std::vector<SimRunRecord>& records);
std::string curve_to_json(const std::vector<BinStat>& bins);

} // namespace aucprobe
