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

#include "zeno/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace zeno::cli {

using nlohmann::json;

double round_sig12(double v) {
    if (!std::isfinite(v) || v == 0) {
        return v;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json round_numbers(const json &value) {
    if (value.is_number_float()) {
        return round_sig12(value.get<double>());
    }
    if (value.is_array() || value.is_object()) {
        json out = value;
        for (auto &item : out) {
            item = round_numbers(item);
        }
        return out;
    }
    return value;
}

json error_record(std::string_view kind, const std::vector<std::string> &messages) {
    return {{"kind", kind}, {"messages", messages}};
}

std::string render_json(const Report &report) {
    json doc = {{"command", report.command}, {"config", report.config}, {"exit_code", report.exit_code}};
    if (report.errors.empty()) {
        doc["result"] = report.result;
    } else {
        doc["errors"] = report.errors;
    }
    return round_numbers(doc).dump(2) + "\n";
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

namespace {

std::string cell(const json &value) {
    if (value.is_null()) {
        return "";
    }
    if (value.is_string()) {
        return csv_field(value.get<std::string>());
    }
    if (value.is_number_float()) {
        const double v = value.get<double>();
        if (!std::isfinite(v)) {
            return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return buf;
    }
    return csv_field(value.dump());
}

void append_row(std::string &out, const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += fields[i];
    }
    out += "\r\n";
}

}  // namespace

std::string render_csv(const Report &report) {
    const std::string config = round_numbers(report.config).dump();
    std::string out;
    if (!report.errors.empty()) {
        append_row(out, {"kind", "message", "config"});
        bool first = true;
        for (const auto &record : report.errors) {
            for (const auto &message : record["messages"]) {
                append_row(out,
                           {cell(record["kind"]), cell(message), first ? csv_field(config) : std::string()});
                first = false;
            }
        }
        return out;
    }
    std::vector<std::string> header;
    for (const auto &c : report.table.columns) {
        header.push_back(csv_field(c));
    }
    header.push_back("config");
    append_row(out, header);
    bool first = true;
    for (const auto &row : report.table.rows) {
        std::vector<std::string> fields;
        for (const auto &v : row) {
            fields.push_back(cell(v));
        }
        fields.push_back(first ? csv_field(config) : std::string());
        first = false;
        append_row(out, fields);
    }
    return out;
}

}  // namespace zeno::cli
