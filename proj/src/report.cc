// Copyright 2026 The gwd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwd/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <type_traits>

#include "gwd/errors.h"
#include "json.hpp"

namespace gwd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell &cell, int significant) {
    return std::visit(
        [&](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_real(v, significant);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

ordered_json cell_json(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return nullptr;
                }
                return std::stod(format_real(v));
            } else {
                return v;
            }
        },
        cell);
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); i++) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                i++;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

VerifyResult fail(std::string message) {
    return VerifyResult{false, std::move(message)};
}

VerifyResult verify_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> keys;
    VerifyResult result{true, "ok"};
    size_t width = 0;
    bool expecting_header = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            size_t colon = line.find(':');
            if (colon == std::string::npos) {
                return fail("line " + std::to_string(line_no) + ": metadata line without ':'");
            }
            std::string key = line.substr(1, colon - 1);
            key.erase(0, key.find_first_not_of(' '));
            if (key == "table") {
                result.tables++;
                expecting_header = true;
            } else {
                keys.push_back(key);
            }
            continue;
        }
        if (result.tables == 0) {
            return fail("line " + std::to_string(line_no) + ": data before any '# table:' line");
        }
        auto cells = split_csv_line(line);
        if (expecting_header) {
            width = cells.size();
            expecting_header = false;
            continue;
        }
        if (cells.size() != width) {
            return fail(
                "line " + std::to_string(line_no) + ": " + std::to_string(cells.size()) + " cells, header has " +
                std::to_string(width));
        }
        if (std::any_of(cells.begin(), cells.end(), [](const std::string &c) { return c.empty(); })) {
            return fail("line " + std::to_string(line_no) + ": empty cell");
        }
        result.rows++;
    }
    for (const char *required : {"command", "version", "seed"}) {
        if (std::find(keys.begin(), keys.end(), required) == keys.end()) {
            return fail(std::string("missing '") + required + "' metadata");
        }
    }
    if (result.tables == 0) {
        return fail("no tables");
    }
    if (expecting_header) {
        return fail("table without a header");
    }
    return result;
}

VerifyResult verify_json(std::string_view text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        return fail("not a JSON object");
    }
    if (!doc.contains("meta") || !doc["meta"].is_object()) {
        return fail("missing 'meta' object");
    }
    for (const char *required : {"command", "version", "seed"}) {
        if (!doc["meta"].contains(required)) {
            return fail(std::string("missing '") + required + "' metadata");
        }
    }
    if (!doc.contains("tables") || !doc["tables"].is_array() || doc["tables"].empty()) {
        return fail("missing 'tables' array");
    }
    VerifyResult result{true, "ok"};
    for (const auto &t : doc["tables"]) {
        if (!t.contains("columns") || !t["columns"].is_array() || !t.contains("rows") || !t["rows"].is_array()) {
            return fail("table without columns or rows");
        }
        size_t width = t["columns"].size();
        for (const auto &row : t["rows"]) {
            if (!row.is_array() || row.size() != width) {
                return fail("row width differs from the header");
            }
            result.rows++;
        }
        result.tables++;
    }
    return result;
}

}  // namespace

std::string format_real(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return buf;
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw ParameterError(
            "row has " + std::to_string(row.size()) + " cells but table '" + name + "' has " +
            std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

Report::Report(std::string command, uint64_t seed) {
    meta.emplace_back("command", std::move(command));
    meta.emplace_back("version", std::string(VERSION));
    meta.emplace_back("seed", std::to_string(seed));
}

Table &Report::table(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
}

void Report::set(std::string key, std::string value) {
    for (auto &kv : meta) {
        if (kv.first == key) {
            kv.second = std::move(value);
            return;
        }
    }
    meta.emplace_back(std::move(key), std::move(value));
}

std::string Report::to_csv() const {
    std::string out;
    for (const auto &[k, v] : meta) {
        out += "# " + k + ": " + v + "\n";
    }
    for (const Table &t : tables) {
        out += "# table: " + t.name + "\n";
        for (size_t i = 0; i < t.columns.size(); i++) {
            out += (i ? "," : "") + csv_escape(t.columns[i]);
        }
        out += "\n";
        for (const auto &row : t.rows) {
            for (size_t i = 0; i < row.size(); i++) {
                out += (i ? "," : "") + csv_escape(cell_text(row[i], 15));
            }
            out += "\n";
        }
    }
    return out;
}

std::string Report::to_json() const {
    ordered_json doc;
    doc["meta"] = ordered_json::object();
    for (const auto &[k, v] : meta) {
        doc["meta"][k] = v;
    }
    doc["tables"] = ordered_json::array();
    for (const Table &t : tables) {
        ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        jt["rows"] = ordered_json::array();
        for (const auto &row : t.rows) {
            ordered_json jr = ordered_json::array();
            for (const Cell &c : row) {
                jr.push_back(cell_json(c));
            }
            jt["rows"].push_back(std::move(jr));
        }
        doc["tables"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::string out;
    for (const auto &[k, v] : meta) {
        out += k + ": " + v + "\n";
    }
    for (const Table &t : tables) {
        out += "\n[" + t.name + "]\n";
        std::vector<std::vector<std::string>> grid{t.columns};
        for (const auto &row : t.rows) {
            std::vector<std::string> line;
            for (const Cell &c : row) {
                if (const double *d = std::get_if<double>(&c)) {
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), "%.6f", *d);
                    line.emplace_back(buf);
                } else {
                    line.push_back(cell_text(c, 6));
                }
            }
            grid.push_back(std::move(line));
        }
        std::vector<size_t> widths(t.columns.size(), 0);
        for (const auto &line : grid) {
            for (size_t i = 0; i < line.size(); i++) {
                widths[i] = std::max(widths[i], line[i].size());
            }
        }
        for (const auto &line : grid) {
            for (size_t i = 0; i < line.size(); i++) {
                out += std::string(widths[i] - line[i].size() + (i ? 2 : 0), ' ') + line[i];
            }
            out += "\n";
        }
    }
    return out;
}

VerifyResult verify_report(std::string_view text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return fail("empty input");
    }
    return text[first] == '{' ? verify_json(text) : verify_csv(text);
}

}  // namespace gwd
