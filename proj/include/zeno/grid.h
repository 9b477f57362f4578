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

#ifndef ZENO_GRID_H
#define ZENO_GRID_H

#include <cstdint>
#include <optional>
#include <vector>

#include "zeno/gate.h"

namespace zeno {

/// How the control photon's per-segment loss exponent is chosen.
struct ControlLoss {
    enum class Kind { none, equal_to_target, fixed };
    Kind kind = Kind::none;
    double xi = 0;  ///< used only by Kind::fixed

    static ControlLoss none() { return {}; }
    static ControlLoss equal_to_target() { return {Kind::equal_to_target, 0}; }
    static ControlLoss fixed(double xi_control) { return {Kind::fixed, xi_control}; }

    double resolve(double xi_one) const {
        switch (kind) {
            case Kind::none:
                return 0;
            case Kind::equal_to_target:
                return xi_one;
            case Kind::fixed:
                return xi;
        }
        return 0;
    }
    bool operator==(const ControlLoss &) const = default;
};

struct SearchGrid {
    std::vector<double> epsilon;
    std::vector<double> xi_one;
    std::vector<double> xi_two;

    std::size_t size() const { return epsilon.size() * xi_one.size() * xi_two.size(); }
};

/// Coarse grid for N segments: epsilon over [0.5, 1.5] * pi / (sqrt(2) N) kept
/// inside (0, pi/2), 41 points; xi_one over [1e-5, 1] * 10 / N and xi_two over
/// [1e-2, 1e3] * 10 / N, logarithmic with 40 points per decade.
SearchGrid default_grid(int segments);

/// Logarithmically spaced values from lo to hi inclusive.
std::vector<double> log_space(double lo, double hi, int points_per_decade);

struct GridPoint {
    double epsilon = 0;
    double xi_one = 0;
    double xi_two = 0;
    double error = 0;
    double kappa = 0;
};

/// Strict total order used for the reduction: smaller kappa, then
/// lexicographically smaller (epsilon, xi_one, xi_two).
bool better_point(const GridPoint &a, const GridPoint &b);

struct GridObjective {
    int segments = 1;
    double target_error = 0.5;
    ErrorAggregate aggregate = ErrorAggregate::max;
    ControlLoss control_loss;
};

struct GridScan {
    std::optional<GridPoint> best;
    std::uint64_t feasible_points = 0;
    std::uint64_t evaluations = 0;
};

// Both scans evaluate the same objective as gate_error on every grid point
// with xi_two >= xi_one and return bit-identical results. The serial scan is
// the reference; the parallel one splits the transfer-matrix tables and the
// (epsilon, xi_one) rows across OpenMP threads.
GridScan scan_grid_serial(const GridObjective &objective, const SearchGrid &grid);
GridScan scan_grid_parallel(const GridObjective &objective, const SearchGrid &grid);

}  // namespace zeno

#endif
