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

#ifndef GWD_REPORT_H
#define GWD_REPORT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gwd {

constexpr std::string_view VERSION = "0.1.0";

using Cell = std::variant<int64_t, uint64_t, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws ParameterError when the row width differs from the header.
    void add(std::vector<Cell> row);
};

/// Experiment output: metadata lines plus one or more named tables.
struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Table> tables;

    /// Adds command, version and seed metadata in a fixed order.
    Report(std::string command, uint64_t seed);

    Table &table(std::string name, std::vector<std::string> columns);
    void set(std::string key, std::string value);

    /// '#'-prefixed "key: value" lines, then per table a "# table: name" line,
    /// a header and the rows. Reals use 15 significant digits.
    std::string to_csv() const;
    /// Same content as to_csv as one JSON object.
    std::string to_json() const;
    /// Aligned columns with 6 decimals, for reading on a terminal.
    std::string to_text() const;
};

std::string format_real(double value, int significant = 15);

struct VerifyResult {
    bool ok;
    std::string message;
    size_t tables = 0;
    size_t rows = 0;
};

/// Checks that `text` is a well-formed CSV or JSON report (format is detected
/// from the first character).
VerifyResult verify_report(std::string_view text);

}  // namespace gwd

#endif
