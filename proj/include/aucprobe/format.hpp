#pragma once

#include <charconv>
#include <string>

namespace aucprobe {

/// Shortest decimal form that round-trips the exact double; byte-stable, so
/// emitted files and CLI output stay golden-test friendly.
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace aucprobe
