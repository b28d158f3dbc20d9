#include "aucprobe/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aucprobe {

ConstructionPlan ConstructionPlan::make(std::uint64_t p, std::uint64_t q) {
    if (p == 0 || q == 0 || p >= q) {
        throw std::invalid_argument("construction requires 0 < p < q");
    }
    ConstructionPlan plan;
    plan.p = p;
    plan.q = q;
    plan.r = q - p;
    plan.below_half = 2 * p < q;
    plan.n = static_cast<std::size_t>(4 * q);
    // The below-half case is the mirror image with r in place of p.
    const std::uint64_t s = plan.below_half ? plan.r : p;
    plan.pad = static_cast<std::size_t>(2 * (2 * s - q));
    plan.band_len = static_cast<std::size_t>(2 * (3 * q - 2 * s));
    plan.band_pos = static_cast<std::size_t>(2 * q);
    plan.band_neg = static_cast<std::size_t>(4 * (q - s));
    return plan;
}

namespace {

Labeling build_from_plan(const ConstructionPlan& plan,
                         const std::vector<std::size_t>& half_choice) {
    const std::size_t half_len = plan.band_len / 2;
    if (half_choice.size() != plan.q) {
        throw std::invalid_argument("half_choice must pick exactly q positions");
    }
    std::vector<std::uint8_t> band(plan.band_len, 0);
    for (std::size_t pos : half_choice) {
        if (pos >= half_len) {
            throw std::invalid_argument("half_choice position outside the half band");
        }
        if (band[pos]) {
            throw std::invalid_argument("half_choice positions must be distinct");
        }
        band[pos] = 1;
        band[plan.band_len - 1 - pos] = 1;  // mirror
    }

    std::vector<std::uint8_t> labels;
    labels.reserve(plan.n);
    if (!plan.below_half) {
        labels.insert(labels.end(), plan.pad, 0);
        labels.insert(labels.end(), band.begin(), band.end());
    } else {
        labels.insert(labels.end(), band.begin(), band.end());
        labels.insert(labels.end(), plan.pad, 0);
    }
    return Labeling(std::move(labels));
}

std::vector<std::size_t> default_choice(std::uint64_t q) {
    std::vector<std::size_t> choice(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < choice.size(); ++i) choice[i] = i;
    return choice;
}

} // namespace

Labeling construct_labeling(std::uint64_t p, std::uint64_t q,
                            std::optional<std::vector<std::size_t>> half_choice) {
    const auto plan = ConstructionPlan::make(p, q);
    return build_from_plan(plan, half_choice ? *half_choice : default_choice(q));
}

VariantEnumerator::VariantEnumerator(std::uint64_t p, std::uint64_t q)
    : plan_(ConstructionPlan::make(p, q)), combo_(default_choice(q)) {}

std::optional<Labeling> VariantEnumerator::next() {
    if (done_) return std::nullopt;
    Labeling result = build_from_plan(plan_, combo_);

    // Advance to the next k-subset of {0..half_len-1} in lexicographic order.
    const std::size_t half_len = plan_.band_len / 2;
    const std::size_t k = combo_.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo_[i] < half_len - (k - i)) {
            ++combo_[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                combo_[j] = combo_[j - 1] + 1;
            }
            return result;
        }
    }
    done_ = true;
    return result;
}

ExactCount VariantEnumerator::total() const {
    return binomial(plan_.band_len / 2, plan_.q);
}

std::vector<Labeling> enumerate_variants(std::uint64_t p, std::uint64_t q,
                                         std::optional<std::uint64_t> limit) {
    VariantEnumerator stream(p, q);
    std::vector<Labeling> variants;
    while (!limit || variants.size() < *limit) {
        auto labeling = stream.next();
        if (!labeling) break;
        variants.push_back(std::move(*labeling));
    }
    return variants;
}

double lower_bound(const RationalScore& c, std::size_t n) {
    if (n == 0 || n % 4 != 0) {
        throw std::invalid_argument("lower_bound requires n divisible by 4");
    }
    const std::uint64_t a = c.numerator();
    const std::uint64_t b = c.denominator();
    if (a == 0 || a >= b) {
        throw std::invalid_argument("lower_bound requires 0 < c < 1");
    }
    // 2 - 2|a/b - 1/2| = (2b - |2a - b|) / b, exact before the single division.
    const std::uint64_t spread = 2 * a >= b ? 2 * a - b : b - 2 * a;
    const double base = static_cast<double>(2 * b - spread) / static_cast<double>(b);
    return std::pow(base, static_cast<double>(n / 4));
}

bool lemma_ratio_check(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (!(a > b && b > 0)) {
        throw std::invalid_argument("lemma_ratio_check requires a > b > 0");
    }
    return static_cast<unsigned __int128>(a + c) * b <=
           static_cast<unsigned __int128>(a) * (b + c);
}

} // namespace aucprobe
