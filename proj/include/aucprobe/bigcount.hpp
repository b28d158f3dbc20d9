#pragma once

#include <cstdint>
#include <string>

#include "aucprobe/errors.hpp"

namespace aucprobe {

/// Exact labeling counter backed by unsigned __int128 with overflow checks.
/// Satisfying-labeling counts grow like 2^n, so 64 bits is not enough at the
/// sizes the counting DP can still handle; 128 bits covers n well past 120.
class ExactCount {
public:
    ExactCount() : v_(0) {}
    explicit ExactCount(std::uint64_t v) : v_(v) {}

    ExactCount& operator+=(const ExactCount& other) {
        const unsigned __int128 sum = v_ + other.v_;
        if (sum < v_) {
            throw CountOverflowError("ExactCount: addition overflow");
        }
        v_ = sum;
        return *this;
    }
    ExactCount operator+(const ExactCount& other) const {
        ExactCount r = *this;
        r += other;
        return r;
    }
    ExactCount& operator*=(std::uint64_t m) {
        if (m != 0 && v_ > max_value() / m) {
            throw CountOverflowError("ExactCount: multiplication overflow");
        }
        v_ *= m;
        return *this;
    }
    ExactCount& operator/=(std::uint64_t d) {
        v_ /= d;
        return *this;
    }

    bool operator==(const ExactCount& other) const { return v_ == other.v_; }
    bool operator!=(const ExactCount& other) const { return v_ != other.v_; }
    bool operator<(const ExactCount& other) const { return v_ < other.v_; }
    bool operator<=(const ExactCount& other) const { return v_ <= other.v_; }
    bool operator>(const ExactCount& other) const { return v_ > other.v_; }
    bool operator>=(const ExactCount& other) const { return v_ >= other.v_; }

    bool is_zero() const { return v_ == 0; }
    bool fits_u64() const { return v_ <= ~std::uint64_t{0}; }

    /// Throws CountOverflowError if the value does not fit.
    std::uint64_t as_u64() const {
        if (!fits_u64()) {
            throw CountOverflowError("ExactCount: value exceeds 64 bits");
        }
        return static_cast<std::uint64_t>(v_);
    }

    double approx() const { return static_cast<double>(v_); }

    std::string str() const {
        if (v_ == 0) return "0";
        std::string s;
        unsigned __int128 v = v_;
        while (v > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    }

    unsigned __int128 raw() const { return v_; }

private:
    static unsigned __int128 max_value() { return ~static_cast<unsigned __int128>(0); }

    unsigned __int128 v_;
};

/// Exact binomial coefficient C(n, k). Throws CountOverflowError if the
/// result exceeds 128 bits.
inline ExactCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return ExactCount(0);
    if (k > n - k) k = n - k;
    ExactCount result(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step.
        result *= (n - i + 1);
        result /= i;
    }
    return result;
}

} // namespace aucprobe
