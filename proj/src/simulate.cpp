#include "aucprobe/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "aucprobe/errors.hpp"
#include "aucprobe/format.hpp"
#include "aucprobe/oracle.hpp"
#include "aucprobe/posterior.hpp"
#include "aucprobe/rng.hpp"

namespace aucprobe {

namespace {

constexpr std::size_t kResampleCap = 1000;
constexpr std::size_t kMaxIterations = 10000;
constexpr double kGradTolerance = 1e-8;

std::vector<double> draw_normal_vector(Xoshiro256pp& rng, std::size_t m) {
    std::vector<double> v(m);
    for (double& e : v) e = rng.next_normal();
    return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// log(1 + exp(z)) without overflow.
double log1pexp(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

std::uint8_t draw_label(Xoshiro256pp& rng, double p) {
    return rng.next_double() < p ? 1 : 0;
}

} // namespace

double sigmoid(double z) {
    return 1.0 / (1.0 + std::exp(-z));
}

World generate_world(std::size_t m, std::size_t n_test, std::size_t k_train,
                     std::uint64_t seed, std::optional<std::vector<double>> forced_theta) {
    if (m < 1) throw std::invalid_argument("generate_world: m must be at least 1");
    if (forced_theta && forced_theta->size() != m) {
        throw std::invalid_argument("generate_world: forced theta has wrong dimension");
    }

    Xoshiro256pp rng(seed);
    World world;
    world.theta_true = forced_theta ? *forced_theta : draw_normal_vector(rng, m);

    world.train_x.reserve(k_train);
    world.train_y.reserve(k_train);
    for (std::size_t i = 0; i < k_train; ++i) {
        auto x = draw_normal_vector(rng, m);
        world.train_y.push_back(draw_label(rng, sigmoid(dot(world.theta_true, x))));
        world.train_x.push_back(std::move(x));
    }

    for (std::size_t attempt = 0; attempt < kResampleCap; ++attempt) {
        world.test_x.clear();
        world.test_y.clear();
        for (std::size_t i = 0; i < n_test; ++i) {
            auto x = draw_normal_vector(rng, m);
            world.test_y.push_back(draw_label(rng, sigmoid(dot(world.theta_true, x))));
            world.test_x.push_back(std::move(x));
        }
        const auto positives =
            static_cast<std::size_t>(std::count(world.test_y.begin(), world.test_y.end(), 1));
        if (positives > 0 && positives < n_test) {
            world.resampled = attempt > 0;
            return world;
        }
    }
    throw std::runtime_error("generate_world: resample limit exceeded");
}

double logistic_objective(const std::vector<std::vector<double>>& x,
                          const std::vector<std::uint8_t>& y,
                          const std::vector<double>& theta, double l2_reg) {
    double obj = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double z = dot(theta, x[i]);
        obj += log1pexp(z) - (y[i] ? z : 0.0);
    }
    return obj + 0.5 * l2_reg * dot(theta, theta);
}

std::vector<double> logistic_gradient(const std::vector<std::vector<double>>& x,
                                      const std::vector<std::uint8_t>& y,
                                      const std::vector<double>& theta, double l2_reg) {
    std::vector<double> grad(theta.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double residual = sigmoid(dot(theta, x[i])) - (y[i] ? 1.0 : 0.0);
        for (std::size_t j = 0; j < theta.size(); ++j) {
            grad[j] += residual * x[i][j];
        }
    }
    for (std::size_t j = 0; j < theta.size(); ++j) {
        grad[j] += l2_reg * theta[j];
    }
    return grad;
}

TrainResult train_logistic(const std::vector<std::vector<double>>& x,
                           const std::vector<std::uint8_t>& y, double l2_reg) {
    if (x.empty() || x.size() != y.size()) {
        throw std::invalid_argument("train_logistic: need matching non-empty x and y");
    }
    const std::size_t m = x.front().size();

    TrainResult result;
    result.theta.assign(m, 0.0);
    double obj = logistic_objective(x, y, result.theta, l2_reg);

    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        const auto grad = logistic_gradient(x, y, result.theta, l2_reg);
        const double grad_sq = dot(grad, grad);
        result.grad_norm = std::sqrt(grad_sq);
        result.iterations = iter;
        if (result.grad_norm <= kGradTolerance) {
            result.converged = true;
            return result;
        }

        // Backtracking line search, Armijo condition.
        double step = 1.0;
        std::vector<double> candidate(m);
        while (true) {
            for (std::size_t j = 0; j < m; ++j) {
                candidate[j] = result.theta[j] - step * grad[j];
            }
            const double cand_obj = logistic_objective(x, y, candidate, l2_reg);
            if (cand_obj <= obj - 1e-4 * step * grad_sq || step < 1e-20) {
                result.theta = candidate;
                obj = cand_obj;
                break;
            }
            step *= 0.5;
        }
    }
    const auto final_grad = logistic_gradient(x, y, result.theta, l2_reg);
    result.grad_norm = std::sqrt(dot(final_grad, final_grad));
    result.iterations = kMaxIterations;
    return result;
}

std::vector<double> jitter_for_resubmission(const std::vector<double>& posterior) {
    const std::size_t n = posterior.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return posterior[a] != posterior[b] ? posterior[a] < posterior[b] : a < b;
    });

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t < n; ++t) {
        const double gap = posterior[order[t]] - posterior[order[t - 1]];
        if (gap > 0.0 && gap < min_gap) min_gap = gap;
    }

    const double eps = std::isfinite(min_gap)
                           ? std::min(1e-12, min_gap / (2.0 * static_cast<double>(n)))
                           : 1e-12;
    std::vector<double> jittered(n);
    for (std::size_t i = 0; i < n; ++i) {
        jittered[i] = posterior[i] + static_cast<double>(i) * eps;
    }

    // The additive result must be strictly increasing along the (value, index)
    // order; if ties sit too close to the next ulp to separate, fall back to
    // rank-space guesses, which encode exactly the same weak order.
    bool strictly_increasing = true;
    for (std::size_t t = 1; t < n; ++t) {
        if (!(jittered[order[t - 1]] < jittered[order[t]])) {
            strictly_increasing = false;
            break;
        }
    }
    if (strictly_increasing) return jittered;

    std::vector<double> ranks(n);
    for (std::size_t t = 0; t < n; ++t) {
        ranks[order[t]] = static_cast<double>(t);
    }
    return ranks;
}

std::vector<double> SimConfig::default_bin_edges() {
    std::vector<double> edges;
    for (int i = 0; i <= 20; ++i) edges.push_back(static_cast<double>(i) * 0.05);
    return edges;
}

void SimConfig::validate() const {
    if (n_test < 4) throw std::invalid_argument("SimConfig: n_test must be at least 4");
    if (runs_per_cell < 1) throw std::invalid_argument("SimConfig: runs_per_cell must be at least 1");
    if (!(l2_reg >= 0.0)) throw std::invalid_argument("SimConfig: l2_reg must be non-negative");
    if (m_values.empty() || k_values.empty()) {
        throw std::invalid_argument("SimConfig: m and k ranges must be non-empty");
    }
    for (std::size_t m : m_values) {
        if (m < 1) throw std::invalid_argument("SimConfig: m values must be at least 1");
    }
    for (std::size_t k : k_values) {
        if (k < 1) throw std::invalid_argument("SimConfig: k values must be at least 1");
    }
    if (bin_edges.size() < 2) throw std::invalid_argument("SimConfig: need at least 2 bin edges");
    for (std::size_t i = 1; i < bin_edges.size(); ++i) {
        if (!(bin_edges[i - 1] < bin_edges[i])) {
            throw std::invalid_argument("SimConfig: bin edges must be strictly increasing");
        }
    }
}

SimRunRecord run_attack2_trial(std::size_t m, std::size_t k, std::size_t run,
                               const SimConfig& config) {
    const std::uint64_t trial_seed = derive_seed(config.seed, m, k, run);

    SimRunRecord record;
    record.m = m;
    record.k = k;
    record.run = run;

    // A world whose trained guesses violate oracle preconditions (saturated
    // sigmoid or an exact tie) is redrawn, like a single-class test set.
    std::optional<ProbGuesses> probs;
    World world;
    for (std::size_t attempt = 0; attempt < kResampleCap && !probs; ++attempt) {
        world = generate_world(m, config.n_test, k, derive_seed(trial_seed, 0, attempt));
        const auto trained = train_logistic(world.train_x, world.train_y, config.l2_reg);
        std::vector<double> guesses(config.n_test);
        for (std::size_t i = 0; i < config.n_test; ++i) {
            guesses[i] = sigmoid(dot(trained.theta, world.test_x[i]));
        }
        record.degenerate = world.resampled || attempt > 0;
        try {
            probs.emplace(std::move(guesses));
        } catch (const std::exception&) {
            record.degenerate = true;
        }
    }
    if (!probs) {
        throw std::runtime_error("run_attack2_trial: could not draw a usable world");
    }

    Oracle oracle(Labeling(world.test_y), OracleConfig{}, derive_seed(trial_seed, 1));
    const auto first = oracle.query(Guesses(probs->probs()));
    record.initial_auc = first.score_float;

    const auto posterior = posterior_dp(*probs, *first.score_fraction);
    record.satisfying_count = posterior.satisfying_count;

    const auto second = oracle.query(Guesses(jitter_for_resubmission(posterior.posterior)));
    record.post_auc = second.score_float;
    record.delta = record.post_auc - record.initial_auc;
    return record;
}

std::vector<SimRunRecord> run_sweep(const SimConfig& config) {
    config.validate();
    std::vector<SimRunRecord> records;
    records.reserve(config.m_values.size() * config.k_values.size() * config.runs_per_cell);
    for (std::size_t m : config.m_values) {
        for (std::size_t k : config.k_values) {
            for (std::size_t run = 0; run < config.runs_per_cell; ++run) {
                records.push_back(run_attack2_trial(m, k, run, config));
            }
        }
    }
    return records;
}

std::vector<BinStat> aggregate(const std::vector<SimRunRecord>& records,
                               const std::vector<double>& edges) {
    if (records.empty()) throw std::invalid_argument("aggregate: no records");
    if (edges.size() < 2) throw std::invalid_argument("aggregate: need at least 2 bin edges");
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i - 1] < edges[i])) {
            throw std::invalid_argument("aggregate: bin edges must be strictly increasing");
        }
    }

    const std::size_t bins = edges.size() - 1;
    std::vector<std::vector<double>> deltas(bins);
    for (const auto& r : records) {
        for (std::size_t b = 0; b < bins; ++b) {
            const bool last = b + 1 == bins;
            if (r.initial_auc >= edges[b] &&
                (r.initial_auc < edges[b + 1] || (last && r.initial_auc == edges[b + 1]))) {
                deltas[b].push_back(r.delta);
                break;
            }
        }
    }

    std::vector<BinStat> stats(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        auto& s = stats[b];
        s.lo = edges[b];
        s.hi = edges[b + 1];
        s.count = deltas[b].size();
        if (s.count == 0) continue;
        s.mean_delta = std::accumulate(deltas[b].begin(), deltas[b].end(), 0.0) /
                       static_cast<double>(s.count);
        if (s.count >= 2) {
            double ss = 0.0;
            for (double d : deltas[b]) ss += (d - s.mean_delta) * (d - s.mean_delta);
            s.stderr_delta = std::sqrt(ss / static_cast<double>(s.count - 1)) /
                             std::sqrt(static_cast<double>(s.count));
        }
    }
    return stats;
}

std::optional<double> mean_delta_in_range(const std::vector<SimRunRecord>& records,
                                          double lo, double hi) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : records) {
        if (r.initial_auc >= lo && r.initial_auc < hi) {
            sum += r.delta;
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

std::string records_to_csv(const std::vector<SimRunRecord>& records) {
    std::string out = "m,k,run,C,C_prime,delta,satisfying_count,degenerate\n";
    for (const auto& r : records) {
        out += std::to_string(r.m) + "," + std::to_string(r.k) + "," + std::to_string(r.run) +
               "," + format_double(r.initial_auc) + "," + format_double(r.post_auc) + "," +
               format_double(r.delta) + "," + r.satisfying_count.str() + "," +
               (r.degenerate ? "1" : "0") + "\n";
    }
    return out;
}

std::string curve_to_json(const std::vector<BinStat>& bins) {
    std::string out = "{\"version\":1,\"bins\":[";
    for (std::size_t b = 0; b < bins.size(); ++b) {
        if (b > 0) out += ",";
        out += "{\"lo\":" + format_double(bins[b].lo) + ",\"hi\":" + format_double(bins[b].hi) +
               ",\"count\":" + std::to_string(bins[b].count) +
               ",\"mean_delta\":" + format_double(bins[b].mean_delta) +
               ",\"stderr_delta\":" + format_double(bins[b].stderr_delta) + "}";
    }
    out += "]}\n";
    return out;
}

} // namespace aucprobe
