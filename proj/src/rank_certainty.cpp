#include "aucprobe/rank_certainty.hpp"

#include <stdexcept>

#include "aucprobe/errors.hpp"

namespace aucprobe {

namespace {

void check_preconditions(const RationalScore& c, std::size_t n0, std::size_t n1,
                         const Guesses& guesses) {
    if (n0 < 1 || n1 < 1) {
        throw std::invalid_argument("class counts must both be at least 1");
    }
    if (n0 + n1 != guesses.size()) {
        throw LengthMismatchError("n0 + n1 must equal the number of guesses");
    }
    if (!guesses.all_distinct()) {
        throw TiedGuessesError("certainty deduction requires distinct guesses");
    }
    if (c.numerator() > c.denominator()) {
        throw std::invalid_argument("AUC score must lie in [0, 1]");
    }
}

// Largest k in [1, k_max] with c > 1 - 1/other + k/(n0*n1), i.e.
// a * n0 * n1 > b * (n0*n1 - pairs_lost + k) with c = a/b. The right side
// grows with k, so scan until the inequality fails.
std::size_t max_certain(const RationalScore& c, std::size_t n0, std::size_t n1,
                        std::size_t shrinking_class, std::size_t k_max) {
    const unsigned __int128 pairs = static_cast<unsigned __int128>(n0) * n1;
    const unsigned __int128 lhs = static_cast<unsigned __int128>(c.numerator()) * pairs;
    std::size_t best = 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const unsigned __int128 rhs =
            static_cast<unsigned __int128>(c.denominator()) * (pairs - shrinking_class + k);
        if (lhs > rhs) {
            best = k;
        } else {
            break;
        }
    }
    return best;
}

} // namespace

CertaintyResult deduce_certain_labels(const RationalScore& c, std::size_t n0,
                                      std::size_t n1, const Guesses& guesses) {
    check_preconditions(c, n0, n1, guesses);

    CertaintyResult result;
    result.k_neg = max_certain(c, n0, n1, /*shrinking_class=*/n0, /*k_max=*/n0);
    result.k_pos = max_certain(c, n0, n1, /*shrinking_class=*/n1, /*k_max=*/n1);

    const auto order = rank_order(guesses);
    result.neg_indices.assign(order.begin(), order.begin() + result.k_neg);
    result.pos_indices.assign(order.end() - result.k_pos, order.end());
    return result;
}

std::optional<Labeling> perfect_auc_shortcut(const RationalScore& c, std::size_t n0,
                                             std::size_t n1, const Guesses& guesses) {
    check_preconditions(c, n0, n1, guesses);
    if (c.numerator() != c.denominator()) {
        return std::nullopt;
    }
    // AUC 1 separates the classes perfectly, so the rank order pins every label.
    const auto order = rank_order(guesses);
    std::vector<std::uint8_t> labels(guesses.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        labels[order[pos]] = pos < n0 ? 0 : 1;
    }
    return Labeling(std::move(labels));
}

} // namespace aucprobe
