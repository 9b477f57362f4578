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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zeno/commands.h"

namespace {

using zeno::cli::Command;

int emit(const zeno::cli::Report &report, zeno::cli::OutputFormat format, const std::string &out_path) {
    const std::string text = zeno::cli::render(report, format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text)) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return zeno::cli::kExitInvalid;
        }
    }
    if (report.exit_code != 0) {
        for (const auto &record : report.errors) {
            for (const auto &m : record["messages"]) {
                std::cerr << record["kind"].get<std::string>() << ": " << m.get<std::string>() << "\n";
            }
        }
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Zeno-gate design and analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format_text = "json";
    std::vector<int> segments;
    std::optional<double> target_error;
    std::string aggregate_text;

    struct Entry {
        Command command;
        const char *help;
    };
    const Entry entries[] = {
        {Command::simulate, "Propagate one gate configuration through the four basis scenarios"},
        {Command::optimize, "Minimise the absorption ratio for a segment count and error budget"},
        {Command::table1, "Reproduce the example parameter table"},
        {Command::rates, "Physical rate estimates for a scenario"},
        {Command::sweep, "Minimal ratio over several segment counts"},
        {Command::franson, "Compare with the two-branch design"},
    };
    std::vector<std::pair<CLI::App *, Command>> subs;
    for (const auto &e : entries) {
        CLI::App *sub = app.add_subcommand(std::string(zeno::cli::command_name(e.command)), e.help);
        sub->add_option("--config", config_path, "Config file (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "Output file (default stdout)");
        sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--segments", segments, "Segment count (repeatable for sweep)")->take_all();
        sub->add_option("--target-error", target_error, "Target error probability");
        sub->add_option("--aggregate", aggregate_text, "sum or max")->check(CLI::IsMember({"sum", "max"}));
        subs.emplace_back(sub, e.command);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : zeno::cli::kExitInvalid;
    }

    Command command = Command::simulate;
    for (const auto &[sub, c] : subs) {
        if (sub->parsed()) {
            command = c;
        }
    }
    zeno::cli::Overrides overrides;
    overrides.segments = segments;
    overrides.target_error = target_error;
    if (!aggregate_text.empty()) {
        overrides.aggregate = zeno::parse_aggregate(aggregate_text);
    }
    const auto format = zeno::cli::parse_format(format_text);
    return emit(zeno::cli::invoke(command, config_path, overrides), format, out_path);
}
