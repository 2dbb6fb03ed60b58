#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptwh {

inline constexpr const char* kArtifactVersion = "0.1.0";

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

/// Round-trip formatting: 17 significant digits.
std::string format_double(double value);

/// UTF-8, LF line endings, mandatory header row.
void write_csv(const std::filesystem::path& path, const Table& table);

/// Same data as an array of objects keyed by column name.
void write_json_table(const std::filesystem::path& path, const Table& table);

void write_table(const std::filesystem::path& path, const Table& table,
                 OutputFormat format);

/// Every output file is accompanied by a manifest sufficient to re-run
/// the command; re-running reproduces the data files bit-identically
/// (modulo wall_time).
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, Cell>> config;  // resolved parameter set
    std::string artifact_version = kArtifactVersion;
    double wall_time_seconds = 0.0;
    std::vector<std::uint64_t> seeds_used;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace ptwh
