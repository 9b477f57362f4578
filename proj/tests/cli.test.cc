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

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "zeno/commands.h"
#include "zeno/design.h"

using namespace zeno;
using namespace zeno::cli;
using nlohmann::json;

namespace {

struct Captured {
    int status = -1;
    std::string out;
};

Captured run_cli(const std::string &args) {
    Captured c;
    const std::string cmd = std::string(ZENO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return c;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        c.out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::string write_temp(const std::string &name, const std::string &text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(commands, franson_reports_both_schemes) {
    Overrides o;
    o.target_error = 0.5;
    const Report r = invoke(Command::franson, "", o);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NEAR(r.result["ratio"].get<double>(), 64, 64e-6);
    EXPECT_NEAR(r.result["kappa_three_branch"].get<double>(), kappa_required(0.5), 1e-12);
    EXPECT_TRUE(r.result["nonphysical"].get<bool>());
    EXPECT_EQ(r.config["franson"]["target_error"], 0.5);
}

TEST(commands, table1_has_six_columns) {
    const Report r = invoke(Command::table1, "", {});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.table.columns,
              (std::vector<std::string>{"p_error", "segments", "p_two_segment", "p_one_segment", "kappa", "repetitions"}));
    ASSERT_EQ(r.table.rows.size(), 3u);
    EXPECT_TRUE(r.config.contains("scenario"));
}

TEST(commands, simulate_from_asymptotic_laws) {
    Overrides o;
    o.segments = {60};
    o.target_error = 0.1;
    const Report r = invoke(Command::simulate, "", o);
    ASSERT_EQ(r.exit_code, 0);
    const auto g = asymptotic_params(0.1, 60).to_config(60);
    EXPECT_EQ(r.result["p_error_max"].get<double>(), gate_error(g).p_error_max);
    EXPECT_GE(r.result["superposed_control"]["concurrence"].get<double>(), 0.8);
    EXPECT_EQ(r.config["gate"]["segments"], 60);
}

TEST(commands, overrides_win_over_config) {
    ConfigDocument doc = parse_config(R"({"optimization": {"segments": 10, "target_error": 0.5}})");
    Overrides o;
    o.segments = {22};
    o.aggregate = ErrorAggregate::sum;
    apply_overrides(Command::optimize, o, doc);
    EXPECT_EQ(doc.optimization->segments, 22);
    EXPECT_EQ(doc.optimization->aggregate, ErrorAggregate::sum);
    ConfigDocument other;
    EXPECT_ANY_THROW(apply_overrides(Command::table1, o, other));
}

TEST(commands, invalid_input_exit_code) {
    const Report missing = invoke(Command::simulate, "", {});
    EXPECT_EQ(missing.exit_code, kExitInvalid);
    EXPECT_EQ(missing.errors[0]["kind"], "usage");
    const auto path = write_temp("bad_gate.json", R"({"gate": {"segments": 10, "epsilon_rad": 0.2, "xi_one": 1, "xi_two": 0.5}})");
    const Report bad = invoke(Command::simulate, path, {});
    EXPECT_EQ(bad.exit_code, kExitInvalid);
    EXPECT_EQ(bad.errors[0]["kind"], "validation");
    const Report nofile = invoke(Command::rates, "/nonexistent/x.json", {});
    EXPECT_EQ(nofile.exit_code, kExitInvalid);
}

TEST(commands, infeasible_exit_code) {
    Overrides o;
    o.segments = {1};
    o.target_error = 0.01;
    const Report r = invoke(Command::optimize, "", o);
    EXPECT_EQ(r.exit_code, kExitInfeasible);
    EXPECT_EQ(r.errors[0]["kind"], "infeasible");
}

TEST(commands, rates_report) {
    const Report r = invoke(Command::rates, "", {});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NEAR(r.result["p_two_photon"].get<double>(), 8.86e-11, 0.01e-11);
    EXPECT_NEAR(r.result["molecules_total"].get<double>(), 2e10, 1e3);
    EXPECT_EQ(r.result["repetitions"][0]["repetitions"], 635);
    EXPECT_TRUE(r.result["interference_frequency_hz_angular"].is_null());
    EXPECT_TRUE(r.result["pump_detuning_ok"].get<bool>());
}

TEST(commands, sweep_rows) {
    Overrides o;
    o.segments = {1, 10, 22};
    o.target_error = 0.5;
    const Report r = invoke(Command::sweep, "", o);
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(r.result["rows"].size(), 3u);
    EXPECT_LT(r.result["rows"][2]["kappa"].get<double>(), r.result["rows"][1]["kappa"].get<double>());
}

TEST(cli, repeated_runs_are_byte_identical) {
    const std::string a = ::testing::TempDir() + "run_a.json";
    const std::string b = ::testing::TempDir() + "run_b.json";
    for (const std::string &fmt : {std::string("json"), std::string("csv")}) {
        ASSERT_EQ(run_cli("sweep --segments 10 --segments 22 --format " + fmt + " --out " + a).status, 0);
        ASSERT_EQ(run_cli("sweep --segments 10 --segments 22 --format " + fmt + " --out " + b).status, 0);
        const std::string first = slurp(a);
        EXPECT_FALSE(first.empty());
        EXPECT_EQ(first, slurp(b));
    }
}

TEST(cli, franson_command_line) {
    const auto c = run_cli("franson --target-error 0.5");
    ASSERT_EQ(c.status, 0);
    const json doc = json::parse(c.out);
    EXPECT_EQ(doc["result"]["ratio"].get<double>(), 64.0);
}

TEST(cli, config_file_and_exit_codes) {
    const auto good = write_temp("gate.json", R"({"gate": {"segments": 10, "epsilon_rad": 0.2221, "xi_one": 0.1307, "xi_two": 1.498}})");
    const auto ok = run_cli("simulate --config " + good + " --format csv");
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(ok.out.rfind("scenario,p_success", 0), 0u);
    const auto suffix = write_temp("suffix.json", R"({"scenario": {"omega_one": 3.7e15}})");
    const auto bad = run_cli("rates --config " + suffix);
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(json::parse(bad.out)["errors"][0]["kind"], "parse");
    EXPECT_EQ(run_cli("optimize --segments 1 --target-error 0.01").status, 2);
    EXPECT_EQ(run_cli("optimize --aggregate mean").status, 1);
    EXPECT_EQ(run_cli("plot").status, 1);
}
