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

#include "zeno/grid.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include <omp.h>

namespace zeno {

namespace {

/// Worst failure over the two control-absent inputs for one (epsilon, xi_one).
double absent_failure(int segments, double epsilon, double xi_one) {
    const Matrix3 t = segment_power({epsilon, xi_one}, segments);
    const double up = outcome_from_transfer(t, Scenario::control_absent_upper, 1.0).failure();
    const double low = outcome_from_transfer(t, Scenario::control_absent_lower, 1.0).failure();
    return std::max(up, low);
}

/// Smallest designated-branch probability over the two control-present
/// inputs for one (epsilon, xi_two); the failure is 1 - this * survival.
double present_designated(int segments, double epsilon, double xi_two) {
    const Matrix3 t = segment_power({epsilon, xi_two}, segments);
    const double up = outcome_from_transfer(t, Scenario::control_present_upper, 1.0).p_success;
    const double low = outcome_from_transfer(t, Scenario::control_present_lower, 1.0).p_success;
    return std::min(up, low);
}

struct Tables {
    std::vector<double> absent;   // [eps][xi_one]
    std::vector<double> present;  // [eps][xi_two]
};

void fill_absent(const GridObjective &o, const SearchGrid &g, Tables &t, std::size_t flat) {
    const std::size_t i = flat / g.xi_one.size();
    const std::size_t j = flat % g.xi_one.size();
    t.absent[flat] = absent_failure(o.segments, g.epsilon[i], g.xi_one[j]);
}

void fill_present(const GridObjective &o, const SearchGrid &g, Tables &t, std::size_t flat) {
    const std::size_t i = flat / g.xi_two.size();
    const std::size_t k = flat % g.xi_two.size();
    t.present[flat] = present_designated(o.segments, g.epsilon[i], g.xi_two[k]);
}

/// Scan one (epsilon, xi_one) row over every xi_two.
void scan_row(const GridObjective &o, const SearchGrid &g, const Tables &t, std::size_t row, GridScan &acc) {
    const std::size_t i = row / g.xi_one.size();
    const std::size_t j = row % g.xi_one.size();
    const double xi_one = g.xi_one[j];
    const double fail_absent = t.absent[row];
    const double survival = std::exp(-2.0 * o.segments * o.control_loss.resolve(xi_one));
    const std::size_t nk = g.xi_two.size();
    for (std::size_t k = 0; k < nk; ++k) {
        const double xi_two = g.xi_two[k];
        if (xi_two < xi_one) {
            continue;
        }
        ++acc.evaluations;
        const double fail_present = 1.0 - t.present[i * nk + k] * survival;
        const double error = o.aggregate == ErrorAggregate::sum ? fail_absent + fail_present
                                                                : std::max(fail_absent, fail_present);
        if (!(error <= o.target_error)) {
            continue;
        }
        ++acc.feasible_points;
        GridPoint p{g.epsilon[i], xi_one, xi_two, error, xi_two / xi_one};
        if (!acc.best || better_point(p, *acc.best)) {
            acc.best = p;
        }
    }
}

void merge(GridScan &into, const GridScan &from) {
    into.evaluations += from.evaluations;
    into.feasible_points += from.feasible_points;
    if (from.best && (!into.best || better_point(*from.best, *into.best))) {
        into.best = from.best;
    }
}

}  // namespace

std::vector<double> log_space(double lo, double hi, int points_per_decade) {
    const double decades = std::log10(hi / lo);
    const int steps = static_cast<int>(std::lround(decades * points_per_decade));
    std::vector<double> out;
    out.reserve(steps + 1);
    for (int s = 0; s <= steps; ++s) {
        out.push_back(lo * std::pow(10.0, static_cast<double>(s) / points_per_decade));
    }
    return out;
}

SearchGrid default_grid(int segments) {
    if (segments < 1) {
        throw invalid_parameter("segments must be >= 1");
    }
    const double base = std::numbers::pi / (std::numbers::sqrt2 * segments);
    const double scale = 10.0 / segments;
    SearchGrid g;
    constexpr int kEpsilonPoints = 41;
    for (int s = 0; s < kEpsilonPoints; ++s) {
        const double e = base * (0.5 + static_cast<double>(s) / (kEpsilonPoints - 1));
        if (e > 0 && e < std::numbers::pi / 2) {
            g.epsilon.push_back(e);
        }
    }
    g.xi_one = log_space(1e-5 * scale, 1.0 * scale, 40);
    g.xi_two = log_space(1e-2 * scale, 1e3 * scale, 40);
    return g;
}

bool better_point(const GridPoint &a, const GridPoint &b) {
    return std::tie(a.kappa, a.epsilon, a.xi_one, a.xi_two) < std::tie(b.kappa, b.epsilon, b.xi_one, b.xi_two);
}

GridScan scan_grid_serial(const GridObjective &o, const SearchGrid &g) {
    Tables t{std::vector<double>(g.epsilon.size() * g.xi_one.size()),
             std::vector<double>(g.epsilon.size() * g.xi_two.size())};
    for (std::size_t f = 0; f < t.absent.size(); ++f) {
        fill_absent(o, g, t, f);
    }
    for (std::size_t f = 0; f < t.present.size(); ++f) {
        fill_present(o, g, t, f);
    }
    GridScan acc;
    for (std::size_t row = 0; row < t.absent.size(); ++row) {
        scan_row(o, g, t, row, acc);
    }
    return acc;
}

GridScan scan_grid_parallel(const GridObjective &o, const SearchGrid &g) {
    Tables t{std::vector<double>(g.epsilon.size() * g.xi_one.size()),
             std::vector<double>(g.epsilon.size() * g.xi_two.size())};
    const auto n_absent = static_cast<std::int64_t>(t.absent.size());
    const auto n_present = static_cast<std::int64_t>(t.present.size());

    GridScan acc;
#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (std::int64_t f = 0; f < n_absent; ++f) {
            fill_absent(o, g, t, static_cast<std::size_t>(f));
        }
#pragma omp for schedule(static)
        for (std::int64_t f = 0; f < n_present; ++f) {
            fill_present(o, g, t, static_cast<std::size_t>(f));
        }

        GridScan local;
#pragma omp for schedule(static) nowait
        for (std::int64_t row = 0; row < n_absent; ++row) {
            scan_row(o, g, t, static_cast<std::size_t>(row), local);
        }
#pragma omp critical(zeno_grid_merge)
        merge(acc, local);
    }
    return acc;
}

}  // namespace zeno
