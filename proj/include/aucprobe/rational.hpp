#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aucprobe {

/// An exact non-negative fraction. AUC scores are ratios of pair counts, so
/// equality and ordering are decided by cross-multiplied integer arithmetic,
/// never by floating-point comparison.
///
/// Values produced by the AUC functions always satisfy numerator <= denominator;
/// the type itself also admits out-of-range query targets (e.g. 5/4), which
/// simply match no labeling downstream.
class RationalScore {
public:
    RationalScore(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    /// Same value with numerator and denominator divided by their gcd.
    RationalScore reduced() const;

    /// Float view. A single IEEE division, so it is within one ulp of the
    /// true value.
    double value() const;

    /// Reduced textual form "p/q".
    std::string str() const;

    /// Parses "p/q" or a bare non-negative integer ("1" means 1/1).
    /// Anything else -- including decimal notation -- yields nullopt.
    static std::optional<RationalScore> parse(std::string_view text);

    bool operator==(const RationalScore& other) const;
    bool operator!=(const RationalScore& other) const { return !(*this == other); }
    bool operator<(const RationalScore& other) const;
    bool operator<=(const RationalScore& other) const;
    bool operator>(const RationalScore& other) const { return other < *this; }
    bool operator>=(const RationalScore& other) const { return other <= *this; }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

} // namespace aucprobe
