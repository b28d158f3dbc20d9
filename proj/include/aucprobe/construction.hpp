#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aucprobe/auc.hpp"
#include "aucprobe/bigcount.hpp"
#include "aucprobe/rational.hpp"

namespace aucprobe {

/// Band layout for a labeling of size n = 4q whose AUC against ascending
/// guesses is exactly p/q. For c = p/q >= 1/2 the layout is a run of leading
/// negatives followed by a mirror-symmetric mixed band; for c < 1/2 the run
/// of negatives trails instead (the AUC flipped around 1/2 with r = q - p).
struct ConstructionPlan {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;        // q - p, used by the below-half case
    bool below_half = false;
    std::size_t n = 0;          // 4q
    std::size_t pad = 0;        // pure-negative run: leading (>=1/2) or trailing (<1/2)
    std::size_t band_len = 0;
    std::size_t band_pos = 0;   // positives in the band: always 2q
    std::size_t band_neg = 0;

    /// Requires 0 < p < q. p/q need not be reduced.
    static ConstructionPlan make(std::uint64_t p, std::uint64_t q);
};

/// Builds a labeling of length 4q with AUC exactly p/q against any ascending
/// guesses. half_choice selects which band_len/2 positions of the half band
/// carry the q positives (mirrored onto the other half); the default packs
/// them at the leading positions.
Labeling construct_labeling(std::uint64_t p, std::uint64_t q,
                            std::optional<std::vector<std::size_t>> half_choice = std::nullopt);

/// Streams every mirror-symmetric variant in lexicographic order of the
/// half-band position subset. The total is C(band_len/2, q).
class VariantEnumerator {
public:
    VariantEnumerator(std::uint64_t p, std::uint64_t q);

    /// Next variant, or nullopt when exhausted.
    std::optional<Labeling> next();

    /// C(band_len/2, q), the number of variants this stream yields.
    ExactCount total() const;

    const ConstructionPlan& plan() const { return plan_; }

private:
    ConstructionPlan plan_;
    std::vector<std::size_t> combo_;  // current position subset, ascending
    bool done_ = false;
};

/// Materializes variants (all of them, or the first `limit`).
std::vector<Labeling> enumerate_variants(std::uint64_t p, std::uint64_t q,
                                         std::optional<std::uint64_t> limit = std::nullopt);

/// The exponential lower bound (2 - 2|c - 1/2|)^(n/4) on the number of
/// labelings with AUC exactly c. Requires n divisible by 4 and 0 < c < 1.
double lower_bound(const RationalScore& c, std::size_t n);

/// (a+c)/(b+c) <= a/b for a > b > 0, c >= 0, decided in exact integers.
/// Always true under the preconditions; exposed as a tested property since
/// it underpins the binomial bounding step.
bool lemma_ratio_check(std::uint64_t a, std::uint64_t b, std::uint64_t c);

} // namespace aucprobe
