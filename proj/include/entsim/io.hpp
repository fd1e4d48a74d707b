#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entsim/errors.hpp"

namespace entsim {

/// 17 significant digits: enough for exact double round-trips.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline constexpr const char* kManifestPrefix = "# entsim-manifest ";

/// One value per cell; doubles rendered with format_double by the caller.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(const std::string& path, const nlohmann::json& manifest, const CsvTable& table) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot open output file: " + path);
    out << kManifestPrefix << manifest.dump() << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << row[c] << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

inline void write_json(const std::string& path, const nlohmann::json& manifest, const nlohmann::json& data) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot open output file: " + path);
    nlohmann::json doc;
    doc["manifest"] = manifest;
    doc["data"] = data;
    out << doc.dump(2) << "\n";
}

struct LoadedCsv {
    nlohmann::json manifest;
    CsvTable table;
};

/// Reads back a CSV written by write_csv, manifest line included.
inline LoadedCsv load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    LoadedCsv loaded;
    std::string line;
    if (!std::getline(in, line) || line.rfind(kManifestPrefix, 0) != 0)
        throw InputError("missing manifest line in " + path);
    loaded.manifest = nlohmann::json::parse(line.substr(std::string(kManifestPrefix).size()));
    if (!std::getline(in, line)) throw InputError("missing header line in " + path);
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) loaded.table.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::stringstream cells(line);
        while (std::getline(cells, cell, ',')) row.push_back(cell);
        loaded.table.rows.push_back(std::move(row));
    }
    return loaded;
}

}  // namespace entsim
