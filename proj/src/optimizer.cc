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

#include "zeno/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <tuple>

#include "zeno/design.h"
#include "zeno/nelder_mead.h"

namespace zeno {

namespace {

constexpr int kSimplexIterationCap = 500;
/// Weight of the relative budget violation added to ln kappa.
constexpr double kPenaltyWeight = 100.0;
constexpr int kBisectionSteps = 80;
constexpr int kProfilePoints = 10;
constexpr double kProfileStep = 0.01;
constexpr double kProfileLogSpan = 0.5;
constexpr int kGoldenSteps = 40;
constexpr double kInfeasibleFloor = 1e3;

/// Golden-section search for a minimum of f on [a, b]; returns the best value seen.
template <typename F>
double golden_section(F &&f, double a, double b, int steps) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c);
    double fd = f(d);
    double best = std::min(fc, fd);
    for (int i = 0; i < steps; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
        best = std::min({best, fc, fd});
    }
    return best;
}

struct Candidate {
    double epsilon;
    double xi_one;
    double xi_two;
    double error;
    double kappa;
};

bool better(const Candidate &a, const Candidate &b) {
    return std::tie(a.kappa, a.epsilon, a.xi_one, a.xi_two) < std::tie(b.kappa, b.epsilon, b.xi_one, b.xi_two);
}

double base_epsilon(int segments) {
    return std::numbers::pi / (std::numbers::sqrt2 * segments);
}

}  // namespace

void OptimizationProblem::validate() const {
    if (segments < 1) {
        throw invalid_parameter("segments must be >= 1");
    }
    if (!(target_error > 0 && target_error < 1)) {
        throw invalid_parameter("target_error must lie in (0, 1)");
    }
    if (control_loss.kind == ControlLoss::Kind::fixed && !(control_loss.xi >= 0)) {
        throw invalid_parameter("fixed control loss must be >= 0");
    }
}

OptimizationResult minimize_kappa(const OptimizationProblem &problem) {
    problem.validate();
    const int n = problem.segments;
    const double e0 = base_epsilon(n);

    const GridObjective objective{n, problem.target_error, problem.aggregate, problem.control_loss};
    const SearchGrid grid = default_grid(n);
    const GridScan scan = scan_grid_parallel(objective, grid);
    if (!scan.best) {
        std::ostringstream msg;
        msg << "no grid point reaches error " << problem.target_error << " with N = " << n;
        throw infeasible_problem(msg.str());
    }
    const GridPoint &g = *scan.best;
    Candidate best{g.epsilon, g.xi_one, g.xi_two, g.error, g.kappa};

    auto error_at = [&](double epsilon, double xi_one, double xi_two) {
        const GateConfig cfg{n, epsilon, xi_one, xi_two, problem.control_loss.resolve(xi_one)};
        return gate_error(cfg).aggregate(problem.aggregate);
    };
    const double xi_two_cap = grid.xi_two.back();
    std::uint64_t evaluations = scan.evaluations;
    const double target = problem.target_error;

    auto offer = [&](const Candidate &c) {
        if (better(c, best)) {
            best = c;
        }
    };

    // Smallest feasible ln xi_two in [ln xi_one, ln xi_two_cap] by bisection,
    // or nullopt with the error at the cap.
    struct XiTwo {
        std::optional<double> log_xi_two;
        double error;
    };
    auto smallest_xi_two = [&](double epsilon, double xi_one) -> XiTwo {
        ++evaluations;
        const double err_cap = error_at(epsilon, xi_one, xi_two_cap);
        if (!(err_cap <= target)) {
            return {std::nullopt, err_cap};
        }
        double lo = std::log(xi_one);
        double hi = std::log(xi_two_cap);
        double err_hi = err_cap;
        ++evaluations;
        const double err_lo = error_at(epsilon, xi_one, xi_one);
        if (err_lo <= target) {
            offer({epsilon, xi_one, xi_one, err_lo, 1.0});
            return {lo, err_lo};
        }
        for (int i = 0; i < kBisectionSteps && hi - lo > 1e-13; ++i) {
            const double mid = (lo + hi) / 2;
            ++evaluations;
            const double err_mid = error_at(epsilon, xi_one, std::exp(mid));
            if (err_mid <= target) {
                hi = mid;
                err_hi = err_mid;
            } else {
                lo = mid;
            }
        }
        offer({epsilon, xi_one, std::exp(hi), err_hi, std::exp(hi) / xi_one});
        return {hi, err_hi};
    };

    auto admissible = [&](double epsilon, double log_xi_one) {
        return epsilon > 0 && epsilon < std::numbers::pi / 2 && std::exp(log_xi_one) <= xi_two_cap;
    };

    // Simplex over (epsilon / epsilon_0, ln xi_one); the vertex value is
    // ln kappa with xi_two at its smallest feasible value. Vertices with no
    // feasible xi_two get ln(xi_two_cap / xi_one) plus the relative budget
    // violation.
    auto objective_fn = [&](const std::array<double, 2> &x) {
        const double epsilon = x[0] * e0;
        if (!admissible(epsilon, x[1])) {
            return std::numeric_limits<double>::infinity();
        }
        const XiTwo r = smallest_xi_two(epsilon, std::exp(x[1]));
        if (!r.log_xi_two) {
            return std::log(xi_two_cap) - x[1] + kPenaltyWeight * (r.error - target) / target;
        }
        return *r.log_xi_two - x[1];
    };

    // Restart from the incumbent, shrinking the simplex after restarts that
    // did not improve and growing it after ones that did.
    const double log_step = std::log(10.0) / 40;
    double scale = 1.0;
    int iterations_left = kSimplexIterationCap;
    while (iterations_left > 0 && scale >= 1e-6) {
        const double before = best.kappa;
        const std::array<double, 2> start{best.epsilon / e0, std::log(best.xi_one)};
        const std::array<double, 2> step{0.025 * scale, log_step * scale};
        const auto r = nelder_mead<2>(objective_fn, start, step, iterations_left);
        iterations_left -= std::max(r.iterations, 1);
        scale = best.kappa < before * (1 - 1e-9) ? std::min(1.0, scale * 2) : scale * 0.5;
    }
    const double simplex_kappa = best.kappa;

    // The max aggregate makes the landscape kinked and the simplex can stall
    // on a ridge. Polish along epsilon: the profile minimises ln kappa over
    // ln xi_one by golden section, and is itself scanned and golden-sectioned
    // around the incumbent.
    const double log_xi_centre = std::log(best.xi_one);
    auto profile = [&](double ratio) {
        const double epsilon = ratio * e0;
        auto inner = [&](double log_xi_one) {
            if (!admissible(epsilon, log_xi_one)) {
                return kInfeasibleFloor + log_xi_one;
            }
            const XiTwo r = smallest_xi_two(epsilon, std::exp(log_xi_one));
            return r.log_xi_two ? *r.log_xi_two - log_xi_one : kInfeasibleFloor + log_xi_one;
        };
        return golden_section(inner, log_xi_centre - kProfileLogSpan, log_xi_centre + kProfileLogSpan, kGoldenSteps);
    };
    const double centre = best.epsilon / e0;
    double best_ratio = centre;
    double best_value = std::numeric_limits<double>::infinity();
    for (int k = -kProfilePoints; k <= kProfilePoints; ++k) {
        const double ratio = centre + k * kProfileStep;
        const double v = profile(ratio);
        if (v < best_value) {
            best_value = v;
            best_ratio = ratio;
        }
    }
    golden_section(profile, best_ratio - kProfileStep, best_ratio + kProfileStep, kGoldenSteps);

    // Converged: the simplex restarts ran out of scale before the iteration
    // cap, or the polish found nothing better.
    const bool converged = scale < 1e-6 || best.kappa >= simplex_kappa * (1 - 1e-9);

    OptimizationResult result;
    result.epsilon = best.epsilon;
    result.xi_one = best.xi_one;
    result.xi_two = best.xi_two;
    result.xi_control = problem.control_loss.resolve(best.xi_one);
    result.kappa = best.xi_two / best.xi_one;
    result.achieved_error = best.error;
    result.grid_kappa = g.kappa;
    result.evaluations = evaluations;
    result.converged = converged;
    return result;
}

std::vector<TradeoffRow> tradeoff_curve(double p_error, std::span<const int> segments, ErrorAggregate aggregate) {
    std::vector<TradeoffRow> rows;
    rows.reserve(segments.size());
    for (int n : segments) {
        TradeoffRow row;
        row.segments = n;
        try {
            row.result = minimize_kappa({n, p_error, aggregate, ControlLoss::none()});
        } catch (const infeasible_problem &e) {
            row.infeasible_reason = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

InflationReport control_loss_inflation(double p_error, int segments, int sweep_points) {
    if (segments < 1000) {
        throw invalid_parameter("control_loss_inflation needs at least 1000 segments");
    }
    if (sweep_points < 2) {
        throw invalid_parameter("sweep needs at least two points");
    }
    InflationReport report;
    report.p_error = p_error;
    report.segments = segments;
    report.model =
        "control amplitude damped by exp(-xi_control) in every segment; equal_to_target sets xi_control = xi_one; "
        "aggregate max";

    const OptimizationResult none = minimize_kappa({segments, p_error, ErrorAggregate::max, ControlLoss::none()});
    const OptimizationResult equal =
        minimize_kappa({segments, p_error, ErrorAggregate::max, ControlLoss::equal_to_target()});
    report.kappa_none = none.kappa;
    report.kappa_equal = equal.kappa;
    report.factor = equal.kappa / none.kappa;

    for (int i = 0; i < sweep_points; ++i) {
        const double xi_control = equal.xi_one * i / (sweep_points - 1);
        const OptimizationResult r =
            minimize_kappa({segments, p_error, ErrorAggregate::max, ControlLoss::fixed(xi_control)});
        report.sweep.push_back({xi_control, r.kappa, r.kappa / none.kappa});
    }
    return report;
}

std::vector<Table1Row> reproduce_table1(const PhysicalScenario &scenario) {
    constexpr std::pair<double, int> kRows[] = {{0.5, 10}, {0.25, 25}, {0.1, 60}};
    std::vector<Table1Row> rows;
    for (const auto &[p, n] : kRows) {
        Table1Row row;
        row.p_error = p;
        row.segments = n;
        row.detail = minimize_kappa({n, p, ErrorAggregate::max, ControlLoss::none()});
        row.kappa = row.detail.kappa;
        row.p_two_segment = absorption_prob_from_xi(row.detail.xi_two);
        row.p_one_segment = absorption_prob_from_xi(row.detail.xi_one);
        row.repetitions = required_repetitions(std::max(row.kappa, 1.0), scenario);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace zeno
