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

#ifndef ZENO_GATE_H
#define ZENO_GATE_H

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace zeno {

/// Thrown when a gate or segment parameter is outside its valid range.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Absolute tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kIdentityTolerance = 1e-12;

/// Amplitude transfer matrix over the target branches (upper, middle, lower).
using Matrix3 = Eigen::Matrix3d;

/// Branch indices used throughout: row/column order of the segment matrix.
enum class Branch : int { upper = 0, middle = 1, lower = 2 };

struct SegmentParams {
    double epsilon = 0;  ///< beam-splitter mixing angle [rad]
    double xi = 0;       ///< absorber exponent per pass; amplitude survival is exp(-xi)

    void validate() const;
};

struct GateConfig {
    int segments = 1;
    double epsilon = 0;
    double xi_one = 0;      ///< one-photon loss exponent per segment (control absent)
    double xi_two = 0;      ///< two-photon absorption exponent per segment (control present)
    double xi_control = 0;  ///< control-photon loss exponent per segment

    /// Throws invalid_parameter listing every violated constraint.
    void validate() const;
    double kappa() const { return xi_two / xi_one; }

    bool operator==(const GateConfig &) const = default;
};

struct BranchAmplitudes {
    double upper = 0;
    double middle = 0;
    double lower = 0;

    double norm_squared() const { return upper * upper + middle * middle + lower * lower; }
    double operator[](Branch b) const;
    Eigen::Vector3d as_vector() const { return {upper, middle, lower}; }
    static BranchAmplitudes from_vector(const Eigen::Vector3d &v) { return {v[0], v[1], v[2]}; }
    static BranchAmplitudes basis(Branch b);

    bool operator==(const BranchAmplitudes &) const = default;
};

/// The four basis experiments that define the gate's error.
enum class Scenario : int {
    control_absent_upper = 0,
    control_absent_lower = 1,
    control_present_upper = 2,
    control_present_lower = 3,
};
inline constexpr std::array<Scenario, 4> kAllScenarios{
    Scenario::control_absent_upper,
    Scenario::control_absent_lower,
    Scenario::control_present_upper,
    Scenario::control_present_lower,
};
std::string_view scenario_name(Scenario s);
bool control_present(Scenario s);
Branch input_branch(Scenario s);
/// Control absent: the target must cross to the opposite branch. Present: it must stay.
Branch designated_branch(Scenario s);

/// Probability partition of one scenario. The four entries sum to 1.
struct ScenarioOutcome {
    double p_success = 0;
    double p_absorbed = 0;
    double p_wrong_branch = 0;
    double p_control_lost = 0;

    double failure() const { return 1.0 - p_success; }
};

/// How per-scenario failures are combined into a single error figure.
enum class ErrorAggregate { sum, max };
std::string_view aggregate_name(ErrorAggregate a);
ErrorAggregate parse_aggregate(std::string_view text);

struct ErrorBudget {
    std::array<ScenarioOutcome, 4> per_scenario{};
    /// worst control-absent failure + worst control-present failure
    double p_error_sum = 0;
    /// worst single-scenario failure
    double p_error_max = 0;

    const ScenarioOutcome &at(Scenario s) const { return per_scenario[static_cast<int>(s)]; }
    double aggregate(ErrorAggregate a) const { return a == ErrorAggregate::sum ? p_error_sum : p_error_max; }
};

/// Amplitude map of one segment: beam splitter (upper, middle), absorber on the
/// middle branch, beam splitter (middle, lower).
Matrix3 segment_matrix(SegmentParams p);

/// segment_matrix(p)^n by square-and-multiply. n >= 0.
Matrix3 segment_power(SegmentParams p, int n);

/// Target amplitudes after config.segments segments. The absorber exponent is
/// xi_two when the control photon is present and xi_one otherwise. Control
/// photon loss is not applied here; see gate_error.
BranchAmplitudes propagate(const GateConfig &config, bool control_present, const BranchAmplitudes &input);

/// Outcome of a scenario given the N-segment transfer matrix and the control
/// survival probability (1 when the control photon is absent).
ScenarioOutcome outcome_from_transfer(const Matrix3 &transfer, Scenario s, double control_survival);

/// Control survival probability exp(-2 N xi_control).
double control_survival(const GateConfig &config);

ErrorBudget gate_error(const GateConfig &config);

}  // namespace zeno

#endif
