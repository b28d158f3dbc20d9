#include "aucprobe/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace aucprobe {

RationalScore::RationalScore(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
    if (den_ == 0) {
        throw std::invalid_argument("RationalScore: zero denominator");
    }
}

RationalScore RationalScore::reduced() const {
    const std::uint64_t g = std::gcd(num_, den_);
    return g > 1 ? RationalScore(num_ / g, den_ / g) : *this;
}

double RationalScore::value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string RationalScore::str() const {
    const RationalScore r = reduced();
    return std::to_string(r.num_) + "/" + std::to_string(r.den_);
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

} // namespace

std::optional<RationalScore> RationalScore::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const auto n = parse_u64(text);
        if (!n) return std::nullopt;
        return RationalScore(*n, 1);
    }
    const auto n = parse_u64(text.substr(0, slash));
    const auto d = parse_u64(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return RationalScore(*n, *d);
}

bool RationalScore::operator==(const RationalScore& other) const {
    return static_cast<unsigned __int128>(num_) * other.den_ ==
           static_cast<unsigned __int128>(other.num_) * den_;
}

bool RationalScore::operator<(const RationalScore& other) const {
    return static_cast<unsigned __int128>(num_) * other.den_ <
           static_cast<unsigned __int128>(other.num_) * den_;
}

bool RationalScore::operator<=(const RationalScore& other) const {
    return static_cast<unsigned __int128>(num_) * other.den_ <=
           static_cast<unsigned __int128>(other.num_) * den_;
}

} // namespace aucprobe
