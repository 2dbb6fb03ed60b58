#include "ptwh/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ptwh/errors.hpp"

namespace ptwh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_to_string(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    return std::get<std::string>(cell);
}

ordered_json cell_to_json(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    return std::get<std::string>(cell);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);  // binary: LF line endings everywhere
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    std::ofstream out = open_for_write(path);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw Error("CSV row width does not match header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << cell_to_string(row[c]);
        }
        out << '\n';
    }
}

void write_json_table(const std::filesystem::path& path, const Table& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw Error("JSON row width does not match header");
        }
        ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = cell_to_json(row[c]);
        }
        rows.push_back(std::move(obj));
    }
    std::ofstream out = open_for_write(path);
    out << rows.dump(2) << '\n';
}

void write_table(const std::filesystem::path& path, const Table& table,
                 OutputFormat format) {
    if (format == OutputFormat::csv) {
        write_csv(path, table);
    } else {
        write_json_table(path, table);
    }
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    ordered_json j;
    j["command"] = manifest.command;
    ordered_json cfg;
    for (const auto& [key, value] : manifest.config) cfg[key] = cell_to_json(value);
    j["config_snapshot"] = std::move(cfg);
    j["artifact_version"] = manifest.artifact_version;
    j["wall_time_seconds"] = manifest.wall_time_seconds;
    j["seeds_used"] = manifest.seeds_used;
    std::ofstream out = open_for_write(path);
    out << j.dump(2) << '\n';
}

}  // namespace ptwh
