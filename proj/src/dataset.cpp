#include "aucprobe/dataset.hpp"

#include <fstream>

#include <json.hpp>

#include "aucprobe/errors.hpp"

namespace aucprobe {

namespace {

using nlohmann::json;

std::vector<double> read_real_array(const json& j, const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw SchemaError(std::string(key) + " must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number()) throw SchemaError(std::string(key) + " entries must be numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::uint8_t> read_label_array(const json& j, const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw SchemaError(std::string(key) + " must be an array");
    std::vector<std::uint8_t> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1)) {
            throw SchemaError(std::string(key) + " entries must be 0 or 1");
        }
        out.push_back(static_cast<std::uint8_t>(e.get<std::int64_t>()));
    }
    return out;
}

} // namespace

DatasetFile DatasetFile::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("dataset must be a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != kVersion) {
        throw SchemaError("dataset must declare \"version\": 1");
    }

    DatasetFile d;
    if (j.contains("guesses")) d.guesses = read_real_array(j, "guesses");
    if (j.contains("labels")) d.labels = read_label_array(j, "labels");
    if (j.contains("probs")) d.probs = read_real_array(j, "probs");
    if (!d.guesses && !d.labels && !d.probs) {
        throw SchemaError("dataset contains no guesses, labels, or probs");
    }

    std::optional<std::size_t> len;
    auto check_len = [&](std::size_t n, const char* key) {
        if (len && *len != n) {
            throw SchemaError(std::string("array lengths differ (") + key + ")");
        }
        len = n;
    };
    if (d.guesses) check_len(d.guesses->size(), "guesses");
    if (d.labels) check_len(d.labels->size(), "labels");
    if (d.probs) check_len(d.probs->size(), "probs");
    return d;
}

DatasetFile DatasetFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open dataset file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

std::string DatasetFile::to_json_text() const {
    json j;
    j["version"] = kVersion;
    if (guesses) j["guesses"] = *guesses;
    if (labels) {
        json arr = json::array();
        for (std::uint8_t y : *labels) arr.push_back(static_cast<int>(y));
        j["labels"] = arr;
    }
    if (probs) j["probs"] = *probs;
    return j.dump();
}

void DatasetFile::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write dataset file: " + path.string());
    out << to_json_text() << "\n";
}

} // namespace aucprobe
