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

#include "zeno/design.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zeno {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_probability(double p, const char *name) {
    if (!(p > 0 && p < 1)) {
        throw std::domain_error(std::string(name) + " must lie in (0, 1), got " + std::to_string(p));
    }
}

/// Golden-section minimisation of a unimodal function on [lo, hi].
template <typename F>
double golden_minimum(F &&f, double lo, double hi, int iterations = 200) {
    const double ratio = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && (b - a) > 1e-15 * (std::abs(a) + std::abs(b)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return f((a + b) / 2);
}

}  // namespace

AsymptoticParams asymptotic_params(double p_error, int segments) {
    require_open_probability(p_error, "p_error");
    if (segments < 1) {
        throw std::domain_error("segments must be >= 1");
    }
    const double n = segments;
    return {kPi / (std::numbers::sqrt2 * n), 2.0 * p_error / n, kPi * kPi / (n * p_error)};
}

double kappa_required(double p_error) {
    require_open_probability(p_error, "p_error");
    return kPi * kPi / (2.0 * p_error * p_error);
}

double franson_error(int segments, double xi_one, double xi_two) {
    if (segments < 1) {
        throw std::domain_error("segments must be >= 1");
    }
    if (!(xi_one >= 0)) {
        throw std::domain_error("xi_one must be >= 0");
    }
    if (!(xi_two > 0)) {
        throw std::domain_error("xi_two must be > 0");
    }
    const double n = segments;
    return 4.0 * n * xi_one + 2.0 * kPi * kPi / (n * xi_two);
}

double franson_kappa_min(double p_error) {
    require_open_probability(p_error, "p_error");
    // Only N xi_one and N xi_two enter, so N = 1 is general.
    // Best error reachable at ratio kappa, minimised over u = N xi_one.
    auto best_error = [](double kappa) {
        auto err = [kappa](double log_u) {
            double u = std::exp(log_u);
            return franson_error(1, u, kappa * u);
        };
        return golden_minimum(err, std::log(1e-12), std::log(1e6));
    };
    // best_error is decreasing in kappa; bisect in log kappa.
    double lo = 0;
    double hi = std::log(1e12);
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        double mid = (lo + hi) / 2;
        if (best_error(std::exp(mid)) > p_error) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::exp(hi);
}

double xi_from_absorption_prob(double p_abs) {
    if (!(p_abs >= 0 && p_abs < 1)) {
        throw std::domain_error("absorption probability must lie in [0, 1)");
    }
    return -std::log1p(-p_abs) / 2.0;
}

double absorption_prob_from_xi(double xi) {
    if (!(xi >= 0)) {
        throw std::domain_error("xi must be >= 0");
    }
    return -std::expm1(-2.0 * xi);
}

double kappa_from_segment_probs(double p_two, double p_one) {
    require_open_probability(p_two, "p_two");
    require_open_probability(p_one, "p_one");
    if (p_one > p_two) {
        throw std::domain_error("p_one must not exceed p_two");
    }
    return std::log1p(-p_two) / std::log1p(-p_one);
}

}  // namespace zeno
