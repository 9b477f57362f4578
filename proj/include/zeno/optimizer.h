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

#ifndef ZENO_OPTIMIZER_H
#define ZENO_OPTIMIZER_H

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeno/gate.h"
#include "zeno/grid.h"
#include "zeno/rates.h"

namespace zeno {

/// No grid point meets the error budget.
struct infeasible_problem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimizationProblem {
    int segments = 10;
    double target_error = 0.5;
    ErrorAggregate aggregate = ErrorAggregate::max;
    ControlLoss control_loss;

    void validate() const;
    bool operator==(const OptimizationProblem &) const = default;
};

struct OptimizationResult {
    double epsilon = 0;
    double xi_one = 0;
    double xi_two = 0;
    double xi_control = 0;
    double kappa = 0;
    double achieved_error = 0;
    double grid_kappa = 0;  ///< best kappa after the coarse grid stage
    std::uint64_t evaluations = 0;
    bool converged = false;

    GateConfig config(int segments) const { return {segments, epsilon, xi_one, xi_two, xi_control}; }
};

/// Smallest xi_two / xi_one whose gate error stays within the budget.
///
/// Stage one scans default_grid(N) (see grid.h). Stage two runs Nelder-Mead
/// over (epsilon / epsilon_0, ln xi_one) from the best grid point, with xi_two
/// set to its smallest feasible value by bisection, restarting from the
/// incumbent for at most 500 iterations in total. Stage three polishes along
/// epsilon: a scan of +-10% around the incumbent and a golden-section search,
/// each point minimising over xi_one by golden section. Only feasible points
/// are returned and no stage worsens the one before.
/// Throws infeasible_problem when no grid point is feasible.
OptimizationResult minimize_kappa(const OptimizationProblem &problem);

struct TradeoffRow {
    int segments = 0;
    std::optional<OptimizationResult> result;
    std::string infeasible_reason;
};

std::vector<TradeoffRow> tradeoff_curve(double p_error,
                                        std::span<const int> segments,
                                        ErrorAggregate aggregate = ErrorAggregate::max);

struct InflationSample {
    double xi_control = 0;
    double kappa = 0;
    double factor = 0;
};

/// Control-photon loss model: uniform damping exp(-xi_control) of the control
/// amplitude in every segment; with equal_to_target, xi_control = xi_one.
struct InflationReport {
    double p_error = 0;
    int segments = 0;
    double kappa_none = 0;
    double kappa_equal = 0;
    double factor = 0;
    double reference_factor = 25;
    /// Fixed xi_control from 0 to the equal-loss optimum's xi_one.
    std::vector<InflationSample> sweep;
    std::string model;
};

InflationReport control_loss_inflation(double p_error, int segments, int sweep_points = 5);

struct Table1Row {
    double p_error = 0;
    int segments = 0;
    double p_two_segment = 0;
    double p_one_segment = 0;
    double kappa = 0;
    long long repetitions = 0;
    OptimizationResult detail;
};

/// Rows for (P, N) = (0.5, 10), (0.25, 25), (0.1, 60).
std::vector<Table1Row> reproduce_table1(const PhysicalScenario &scenario = PhysicalScenario::defaults());

}  // namespace zeno

#endif
