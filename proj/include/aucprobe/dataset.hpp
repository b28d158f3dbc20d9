#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aucprobe {

/// Versioned JSON dataset: {"version": 1, "guesses": [...], "labels": [...],
/// "probs": [...]}. All arrays optional, equal length when co-present.
struct DatasetFile {
    static constexpr int kVersion = 1;

    std::optional<std::vector<double>> guesses;
    std::optional<std::vector<std::uint8_t>> labels;
    std::optional<std::vector<double>> probs;

    /// Throws SchemaError on missing file, malformed JSON, unknown version,
    /// bad element types, or mismatched lengths.
    static DatasetFile load(const std::filesystem::path& path);
    static DatasetFile from_json_text(const std::string& text);

    void save(const std::filesystem::path& path) const;
    std::string to_json_text() const;
};

} // namespace aucprobe
