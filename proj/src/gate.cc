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

#include "zeno/gate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace zeno {

namespace {

void throw_if_any(const std::vector<std::string> &violations, std::string_view what) {
    if (violations.empty()) {
        return;
    }
    std::ostringstream out;
    out << "invalid " << what << ":";
    for (const auto &v : violations) {
        out << " " << v << ";";
    }
    throw invalid_parameter(out.str());
}

}  // namespace

void SegmentParams::validate() const {
    std::vector<std::string> bad;
    // pi/2 itself is admitted: it is the fully transmitting splitter.
    if (!(epsilon >= 0 && epsilon <= std::numbers::pi / 2)) {
        bad.push_back("epsilon must lie in [0, pi/2]");
    }
    if (!(xi >= 0) || std::isnan(xi)) {
        bad.push_back("xi must be >= 0");
    }
    throw_if_any(bad, "segment parameters");
}

void GateConfig::validate() const {
    std::vector<std::string> bad;
    if (segments < 1) {
        bad.push_back("segments must be >= 1");
    }
    if (!(epsilon > 0 && epsilon < std::numbers::pi / 2)) {
        bad.push_back("epsilon must lie in (0, pi/2)");
    }
    if (!(xi_one >= 0) || !std::isfinite(xi_one)) {
        bad.push_back("xi_one must be finite and >= 0");
    }
    if (!(xi_two >= xi_one) || std::isnan(xi_two)) {
        bad.push_back("xi_two must be >= xi_one");
    }
    if (!(xi_control >= 0) || std::isnan(xi_control)) {
        bad.push_back("xi_control must be >= 0");
    }
    throw_if_any(bad, "gate config");
}

double BranchAmplitudes::operator[](Branch b) const {
    switch (b) {
        case Branch::upper:
            return upper;
        case Branch::middle:
            return middle;
        case Branch::lower:
            return lower;
    }
    return 0;
}

BranchAmplitudes BranchAmplitudes::basis(Branch b) {
    BranchAmplitudes r;
    switch (b) {
        case Branch::upper:
            r.upper = 1;
            break;
        case Branch::middle:
            r.middle = 1;
            break;
        case Branch::lower:
            r.lower = 1;
            break;
    }
    return r;
}

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::control_absent_upper:
            return "control_absent_upper";
        case Scenario::control_absent_lower:
            return "control_absent_lower";
        case Scenario::control_present_upper:
            return "control_present_upper";
        case Scenario::control_present_lower:
            return "control_present_lower";
    }
    return "?";
}

bool control_present(Scenario s) {
    return s == Scenario::control_present_upper || s == Scenario::control_present_lower;
}

Branch input_branch(Scenario s) {
    return (s == Scenario::control_absent_upper || s == Scenario::control_present_upper) ? Branch::upper
                                                                                          : Branch::lower;
}

Branch designated_branch(Scenario s) {
    Branch in = input_branch(s);
    if (control_present(s)) {
        return in;
    }
    return in == Branch::upper ? Branch::lower : Branch::upper;
}

std::string_view aggregate_name(ErrorAggregate a) {
    return a == ErrorAggregate::sum ? "sum" : "max";
}

ErrorAggregate parse_aggregate(std::string_view text) {
    if (text == "sum") {
        return ErrorAggregate::sum;
    }
    if (text == "max") {
        return ErrorAggregate::max;
    }
    throw invalid_parameter("aggregate must be 'sum' or 'max', got '" + std::string(text) + "'");
}

Matrix3 segment_matrix(SegmentParams p) {
    p.validate();
    const double c = std::cos(p.epsilon);
    const double s = std::sin(p.epsilon);
    const double d = std::exp(-p.xi);
    Matrix3 m;
    m << c, -s, 0,
         d * c * s, d * c * c, -s,
         d * s * s, d * c * s, c;
    return m;
}

Matrix3 segment_power(SegmentParams p, int n) {
    if (n < 0) {
        throw invalid_parameter("segment count must be >= 0");
    }
    Matrix3 base = segment_matrix(p);
    Matrix3 result = Matrix3::Identity();
    // Fixed evaluation order, so results are bit-reproducible.
    while (n > 0) {
        if (n & 1) {
            result = (result * base).eval();
        }
        n >>= 1;
        if (n > 0) {
            base = (base * base).eval();
        }
    }
    return result;
}

BranchAmplitudes propagate(const GateConfig &config, bool control_present, const BranchAmplitudes &input) {
    config.validate();
    const double xi = control_present ? config.xi_two : config.xi_one;
    Matrix3 transfer = segment_power({config.epsilon, xi}, config.segments);
    return BranchAmplitudes::from_vector(transfer * input.as_vector());
}

ScenarioOutcome outcome_from_transfer(const Matrix3 &transfer, Scenario s, double control_survival) {
    const int in = static_cast<int>(input_branch(s));
    const int out = static_cast<int>(designated_branch(s));
    const Eigen::Vector3d column = transfer.col(in);
    const double norm2 = column.squaredNorm();
    const double designated = column[out] * column[out];
    const double survival = control_present(s) ? control_survival : 1.0;

    ScenarioOutcome r;
    r.p_success = designated * survival;
    r.p_control_lost = designated * (1.0 - survival);
    r.p_wrong_branch = norm2 - designated;
    r.p_absorbed = 1.0 - norm2;
    return r;
}

double control_survival(const GateConfig &config) {
    return std::exp(-2.0 * config.segments * config.xi_control);
}

ErrorBudget gate_error(const GateConfig &config) {
    config.validate();
    const Matrix3 absent = segment_power({config.epsilon, config.xi_one}, config.segments);
    const Matrix3 present = segment_power({config.epsilon, config.xi_two}, config.segments);
    const double survival = control_survival(config);

    ErrorBudget budget;
    for (Scenario s : kAllScenarios) {
        const Matrix3 &t = control_present(s) ? present : absent;
        budget.per_scenario[static_cast<int>(s)] = outcome_from_transfer(t, s, survival);
    }
    auto fail = [&](Scenario s) { return budget.at(s).failure(); };
    const double worst_absent = std::max(fail(Scenario::control_absent_upper), fail(Scenario::control_absent_lower));
    const double worst_present = std::max(fail(Scenario::control_present_upper), fail(Scenario::control_present_lower));
    budget.p_error_sum = worst_absent + worst_present;
    budget.p_error_max = std::max(worst_absent, worst_present);
    return budget;
}

}  // namespace zeno
