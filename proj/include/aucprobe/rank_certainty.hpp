#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aucprobe/auc.hpp"
#include "aucprobe/rational.hpp"

namespace aucprobe {

/// Labels deducible with certainty from a reported AUC and known class
/// counts: the k_neg lowest-ranked examples are provably negative and the
/// k_pos highest-ranked provably positive.
struct CertaintyResult {
    std::size_t k_neg = 0;
    std::size_t k_pos = 0;
    std::vector<std::size_t> neg_indices;  // the k_neg lowest-scored original indices
    std::vector<std::size_t> pos_indices;  // the k_pos highest-scored original indices
};

/// Given exact AUC c and class counts (n0, n1):
///   k_neg = max{ k <= n0 : c > 1 - 1/n1 + k/(n0*n1) }   (0 if none)
///   k_pos = max{ k <= n1 : c > 1 - 1/n0 + k/(n0*n1) }   (0 if none)
/// Every comparison is cross-multiplied integer arithmetic; a rounded or
/// noisy score must never be fed in here, since the certainty claim only
/// holds for the exact value.
CertaintyResult deduce_certain_labels(const RationalScore& c, std::size_t n0,
                                      std::size_t n1, const Guesses& guesses);

/// When c == 1 exactly, the labeling is forced outright: the n0 lowest-ranked
/// examples are negative and the n1 highest-ranked positive. Returns nullopt
/// for any other score. Covers the gap left by the strict inequality above,
/// which reaches only k = n0 - 1 at c = 1.
std::optional<Labeling> perfect_auc_shortcut(const RationalScore& c, std::size_t n0,
                                             std::size_t n1, const Guesses& guesses);

} // namespace aucprobe
