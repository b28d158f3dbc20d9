#include "aucprobe/posterior.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aucprobe/errors.hpp"

namespace aucprobe {

namespace {

constexpr std::size_t kBruteForceCap = 24;
constexpr std::size_t kDpCap = 256;

void check_counts(std::optional<ClassCounts> counts, std::size_t n) {
    if (!counts) return;
    if (counts->n0 < 1 || counts->n1 < 1 || counts->n0 + counts->n1 != n) {
        throw std::invalid_argument("known class counts must be positive and sum to n");
    }
}

// Ascending permutation of prob indices; distinctness is a ProbGuesses invariant.
std::vector<std::size_t> ascending_order(const std::vector<double>& probs) {
    std::vector<std::size_t> order(probs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return probs[a] != probs[b] ? probs[a] < probs[b] : a < b;
    });
    return order;
}

// m/(n0*n1) == c, decided in integers.
bool matches_target(std::uint64_t m, std::uint64_t n0, std::uint64_t n1,
                    const RationalScore& c) {
    return static_cast<unsigned __int128>(m) * c.denominator() ==
           static_cast<unsigned __int128>(c.numerator()) * n0 * n1;
}

// Pair-count target for a (n0, n1) split: the m with m/(n0*n1) == c, if the
// division is exact and the target is attainable.
std::optional<std::uint64_t> target_pairs(std::uint64_t n0, std::uint64_t n1,
                                          const RationalScore& c) {
    const unsigned __int128 scaled =
        static_cast<unsigned __int128>(c.numerator()) * n0 * n1;
    if (scaled % c.denominator() != 0) return std::nullopt;
    const unsigned __int128 m = scaled / c.denominator();
    if (m > static_cast<unsigned __int128>(n0) * n1) return std::nullopt;
    return static_cast<std::uint64_t>(m);
}

} // namespace

ProbGuesses::ProbGuesses(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
        throw std::invalid_argument("ProbGuesses: need at least 2 probabilities");
    }
    for (double p : probs_) {
        if (!(p > 0.0 && p < 1.0)) {
            throw std::invalid_argument("ProbGuesses: values must lie strictly in (0, 1)");
        }
    }
    std::vector<double> sorted = probs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw TiedGuessesError("ProbGuesses: values must be pairwise distinct");
    }
}

PosteriorResult posterior_brute_force(const ProbGuesses& probs, const RationalScore& c,
                                      std::optional<ClassCounts> known_counts) {
    const std::size_t n = probs.size();
    if (n > kBruteForceCap) {
        throw std::invalid_argument("posterior_brute_force: n exceeds the 2^24 enumeration cap");
    }
    check_counts(known_counts, n);

    const auto order = ascending_order(probs.probs());
    std::vector<double> pr(n);
    for (std::size_t t = 0; t < n; ++t) {
        pr[t] = probs.probs()[order[t]];
    }

    // Bit t of a mask is the label of the t-th example in rank order.
    std::vector<double> acc(n, 0.0);
    double total = 0.0;
    ExactCount count;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const auto n1p = static_cast<std::uint64_t>(std::popcount(mask));
        if (known_counts && n1p != known_counts->n1) continue;
        const std::uint64_t n0p = n - n1p;

        std::uint64_t pairs = 0;
        std::uint64_t negatives = 0;
        double weight = 1.0;
        for (std::size_t t = 0; t < n; ++t) {
            if ((mask >> t) & 1u) {
                pairs += negatives;
                weight *= pr[t];
            } else {
                ++negatives;
                weight *= 1.0 - pr[t];
            }
        }
        if (!matches_target(pairs, n0p, n1p, c)) continue;

        count += ExactCount(1);
        total += weight;
        for (std::size_t t = 0; t < n; ++t) {
            if ((mask >> t) & 1u) {
                acc[order[t]] += weight;
            }
        }
    }

    if (count.is_zero()) {
        throw NoSatisfyingLabelingError("no labeling attains the requested AUC");
    }

    PosteriorResult result;
    result.posterior.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.posterior[i] = std::clamp(acc[i] / total, 0.0, 1.0);
    }
    result.satisfying_count = count;
    result.total_weight = total;
    result.method = PosteriorMethod::brute_force;
    return result;
}

namespace {

// One weighted forward pass in rank order. table[z][m] is the summed weight
// of partial labelings with z negatives and m correctly ordered pairs placed.
// forced_rank, when set, admits only the positive branch at that position.
// The in-place update order (z descending, m descending) reads only
// not-yet-updated cells.
std::vector<std::vector<double>> weight_forward(const std::vector<double>& pr,
                                                std::optional<std::size_t> forced_rank) {
    const std::size_t n = pr.size();
    const std::size_t max_pairs = (n / 2) * (n - n / 2);
    std::vector<std::vector<double>> table(n + 1, std::vector<double>(max_pairs + 1, 0.0));
    table[0][0] = 1.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double w1 = pr[t];
        const double w0 = 1.0 - pr[t];
        const bool forced = forced_rank && *forced_rank == t;
        for (std::size_t z = std::min(t + 1, n); z + 1 > 0; --z) {
            auto& row = table[z];
            for (std::size_t m = max_pairs; m + 1 > 0; --m) {
                double next = 0.0;
                if (m >= z && row[m - z] != 0.0) {
                    next += row[m - z] * w1;  // label 1: z earlier negatives now correct
                }
                if (!forced && z > 0 && table[z - 1][m] != 0.0) {
                    next += table[z - 1][m] * w0;  // label 0
                }
                row[m] = next;
            }
            if (z == 0) break;
        }
    }
    return table;
}

// Unit-weight version of the same recursion; exact counts.
std::vector<std::vector<ExactCount>> count_forward(std::size_t n) {
    const std::size_t max_pairs = (n / 2) * (n - n / 2);
    std::vector<std::vector<ExactCount>> table(n + 1,
                                               std::vector<ExactCount>(max_pairs + 1));
    table[0][0] = ExactCount(1);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t z = std::min(t + 1, n); z + 1 > 0; --z) {
            auto& row = table[z];
            for (std::size_t m = max_pairs; m + 1 > 0; --m) {
                ExactCount next;
                if (m >= z) next += row[m - z];
                if (z > 0) next += table[z - 1][m];
                row[m] = next;
            }
            if (z == 0) break;
        }
    }
    return table;
}

template <typename T, typename Fold>
void fold_terminal(const std::vector<std::vector<T>>& table, std::size_t n,
                   const RationalScore& c, std::optional<ClassCounts> known_counts,
                   Fold&& fold) {
    for (std::size_t z = 1; z + 1 <= n; ++z) {
        if (known_counts && z != known_counts->n0) continue;
        const auto m = target_pairs(z, n - z, c);
        if (!m) continue;
        fold(table[z][*m]);
    }
}

} // namespace

PosteriorResult posterior_dp(const ProbGuesses& probs, const RationalScore& c,
                             std::optional<ClassCounts> known_counts) {
    const std::size_t n = probs.size();
    if (n > kDpCap) {
        throw std::invalid_argument("posterior_dp: n exceeds the supported cap");
    }
    check_counts(known_counts, n);

    const auto order = ascending_order(probs.probs());
    std::vector<double> pr(n);
    for (std::size_t t = 0; t < n; ++t) {
        pr[t] = probs.probs()[order[t]];
    }

    const auto counts = count_forward(n);
    ExactCount count;
    fold_terminal(counts, n, c, known_counts, [&](const ExactCount& v) { count += v; });
    if (count.is_zero()) {
        throw NoSatisfyingLabelingError("no labeling attains the requested AUC");
    }

    const auto base = weight_forward(pr, std::nullopt);
    double total = 0.0;
    fold_terminal(base, n, c, known_counts, [&](double v) { total += v; });

    PosteriorResult result;
    result.posterior.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto forced = weight_forward(pr, t);
        double forced_total = 0.0;
        fold_terminal(forced, n, c, known_counts, [&](double v) { forced_total += v; });
        result.posterior[order[t]] = std::clamp(forced_total / total, 0.0, 1.0);
    }
    result.satisfying_count = count;
    result.total_weight = total;
    result.method = PosteriorMethod::dp;
    return result;
}

ExactCount count_satisfying(std::size_t n, const RationalScore& c) {
    if (n < 2) {
        throw std::invalid_argument("count_satisfying: n must be at least 2");
    }
    if (n > kDpCap) {
        throw std::invalid_argument("count_satisfying: n exceeds the supported cap");
    }
    const auto counts = count_forward(n);
    ExactCount count;
    fold_terminal(counts, n, c, std::nullopt, [&](const ExactCount& v) { count += v; });
    return count;
}

} // namespace aucprobe
