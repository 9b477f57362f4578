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

#ifndef ZENO_NELDER_MEAD_H
#define ZENO_NELDER_MEAD_H

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace zeno {

template <std::size_t Dim>
struct SimplexResult {
    std::array<double, Dim> x{};
    double value = 0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Deterministic Nelder-Mead with standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). The initial simplex is start
/// plus one vertex per axis offset by step[axis]. Stops when the spread of
/// vertex values falls below value_tol and the simplex diameter below x_tol,
/// or after max_iterations.
template <std::size_t Dim, typename F>
SimplexResult<Dim> nelder_mead(F &&f,
                               const std::array<double, Dim> &start,
                               const std::array<double, Dim> &step,
                               int max_iterations,
                               double value_tol = 1e-12,
                               double x_tol = 1e-10) {
    using Point = std::array<double, Dim>;
    constexpr std::size_t kVertices = Dim + 1;

    std::array<Point, kVertices> pts{};
    std::array<double, kVertices> vals{};
    SimplexResult<Dim> result;

    auto eval = [&](const Point &p) {
        ++result.evaluations;
        return f(p);
    };

    pts[0] = start;
    for (std::size_t a = 0; a < Dim; ++a) {
        pts[a + 1] = start;
        pts[a + 1][a] += step[a];
    }
    for (std::size_t v = 0; v < kVertices; ++v) {
        vals[v] = eval(pts[v]);
    }

    std::array<std::size_t, kVertices> order{};
    auto sort_vertices = [&] {
        std::iota(order.begin(), order.end(), 0);
        // Stable so equal values keep their index order.
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::array<Point, kVertices> p2;
        std::array<double, kVertices> v2;
        for (std::size_t k = 0; k < kVertices; ++k) {
            p2[k] = pts[order[k]];
            v2[k] = vals[order[k]];
        }
        pts = p2;
        vals = v2;
    };

    auto along = [](const Point &from, const Point &to, double t) {
        Point r;
        for (std::size_t a = 0; a < Dim; ++a) {
            r[a] = from[a] + t * (to[a] - from[a]);
        }
        return r;
    };

    sort_vertices();
    for (; result.iterations < max_iterations; ++result.iterations) {
        double diameter = 0;
        for (std::size_t v = 1; v < kVertices; ++v) {
            for (std::size_t a = 0; a < Dim; ++a) {
                diameter = std::max(diameter, std::abs(pts[v][a] - pts[0][a]));
            }
        }
        const bool flat = std::isfinite(vals[Dim]) && std::abs(vals[Dim] - vals[0]) <= value_tol;
        if (flat && diameter <= x_tol) {
            result.converged = true;
            break;
        }

        Point centroid{};
        for (std::size_t v = 0; v < Dim; ++v) {
            for (std::size_t a = 0; a < Dim; ++a) {
                centroid[a] += pts[v][a] / Dim;
            }
        }
        const Point &worst = pts[Dim];

        const Point reflected = along(centroid, worst, -1.0);
        const double f_reflected = eval(reflected);
        if (f_reflected < vals[0]) {
            const Point expanded = along(centroid, worst, -2.0);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                pts[Dim] = expanded;
                vals[Dim] = f_expanded;
            } else {
                pts[Dim] = reflected;
                vals[Dim] = f_reflected;
            }
        } else if (f_reflected < vals[Dim - 1]) {
            pts[Dim] = reflected;
            vals[Dim] = f_reflected;
        } else {
            const bool outside = f_reflected < vals[Dim];
            const Point contracted = outside ? along(centroid, worst, -0.5) : along(centroid, worst, 0.5);
            const double f_contracted = eval(contracted);
            if (f_contracted < (outside ? f_reflected : vals[Dim])) {
                pts[Dim] = contracted;
                vals[Dim] = f_contracted;
            } else {
                for (std::size_t v = 1; v < kVertices; ++v) {
                    pts[v] = along(pts[0], pts[v], 0.5);
                    vals[v] = eval(pts[v]);
                }
            }
        }
        sort_vertices();
    }
    result.x = pts[0];
    result.value = vals[0];
    return result;
}

}  // namespace zeno

#endif
