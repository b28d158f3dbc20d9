#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "aucprobe/dataset.hpp"
#include "aucprobe/errors.hpp"

using namespace aucprobe;

TEST_CASE("parse a full dataset") {
    const auto data = DatasetFile::from_json_text(
        R"({"version": 1, "guesses": [0.5, 0.6, 0.9, 0.4], "labels": [1, 0, 1, 0]})");
    REQUIRE(data.guesses.has_value());
    REQUIRE(data.labels.has_value());
    CHECK_FALSE(data.probs.has_value());
    CHECK(data.guesses->size() == 4);
    CHECK((*data.labels)[0] == 1);
}

TEST_CASE("round trip through text") {
    DatasetFile data;
    data.probs = std::vector<double>{0.5, 0.6, 0.9, 0.4};
    data.labels = std::vector<std::uint8_t>{1, 0, 1, 0};
    const auto parsed = DatasetFile::from_json_text(data.to_json_text());
    CHECK(parsed.probs == data.probs);
    CHECK(parsed.labels == data.labels);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(DatasetFile::from_json_text("not json"), SchemaError);
    CHECK_THROWS_AS(DatasetFile::from_json_text("[1,2]"), SchemaError);
    CHECK_THROWS_AS(DatasetFile::from_json_text(R"({"guesses": [1.0]})"), SchemaError);
    CHECK_THROWS_AS(DatasetFile::from_json_text(R"({"version": 2, "guesses": [1.0]})"),
                    SchemaError);
    CHECK_THROWS_AS(DatasetFile::from_json_text(R"({"version": 1})"), SchemaError);
    CHECK_THROWS_AS(
        DatasetFile::from_json_text(R"({"version": 1, "labels": [0, 1, 2]})"),
        SchemaError);
    CHECK_THROWS_AS(
        DatasetFile::from_json_text(R"({"version": 1, "labels": [0, "x"]})"),
        SchemaError);
    CHECK_THROWS_AS(
        DatasetFile::from_json_text(
            R"({"version": 1, "guesses": [1.0, 2.0], "labels": [1]})"),
        SchemaError);
}

TEST_CASE("file round trip and missing files") {
    const auto path = std::filesystem::temp_directory_path() / "aucprobe_dataset_test.json";
    DatasetFile data;
    data.guesses = std::vector<double>{1.0, 2.0};
    data.save(path);
    const auto loaded = DatasetFile::load(path);
    CHECK(loaded.guesses == data.guesses);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(DatasetFile::load(path), SchemaError);
}
