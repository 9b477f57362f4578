// Copyright 2026 The zenogate Authors
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

#ifndef ZENO_REPORT_H
#define ZENO_REPORT_H

#include <string>
#include <vector>

#include "json.hpp"

namespace zeno::cli {

/// v rounded to 12 significant digits.
double round_sig12(double v);

/// Recursively rounds every floating-point number in a JSON value.
nlohmann::json round_numbers(const nlohmann::json &value);

/// Flat table for CSV output. Cells are JSON scalars (or null).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

struct Report {
    std::string command;
    nlohmann::json config;  ///< fully resolved configuration
    nlohmann::json result;
    Table table;
    /// Structured error records; non-empty means the command failed.
    nlohmann::json errors = nlohmann::json::array();
    int exit_code = 0;
};

nlohmann::json error_record(std::string_view kind, const std::vector<std::string> &messages);

/// Canonical JSON: sorted keys, 12 significant digits, two-space indent, trailing newline.
std::string render_json(const Report &report);

/// RFC-4180 CSV (CRLF line ends). The last column carries the resolved
/// configuration as compact canonical JSON on the first data row only.
/// Failed reports become a kind,message table.
std::string render_csv(const Report &report);

/// RFC-4180 field quoting.
std::string csv_field(const std::string &text);

}  // namespace zeno::cli

#endif
