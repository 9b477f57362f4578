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

#ifndef ZENO_DESIGN_H
#define ZENO_DESIGN_H

#include "zeno/gate.h"

namespace zeno {

/// Large-N parameter laws for a target error probability.
struct AsymptoticParams {
    double epsilon = 0;
    double xi_one = 0;
    double xi_two = 0;

    GateConfig to_config(int segments, double xi_control = 0) const {
        return {segments, epsilon, xi_one, xi_two, xi_control};
    }
};

/// epsilon = pi / (sqrt(2) N), xi_one = 2 P / N, xi_two = pi^2 / (N P).
/// Throws std::domain_error unless 0 < p_error < 1.
AsymptoticParams asymptotic_params(double p_error, int segments);

/// Minimal absorption ratio xi_two / xi_one for the three-branch gate: pi^2 / (2 P^2).
double kappa_required(double p_error);

/// Error estimate of the two-branch design with absorbers on both arms:
/// 4 N xi_one + 2 pi^2 / (N xi_two). Not clamped; may exceed 1.
double franson_error(int segments, double xi_one, double xi_two);

/// Smallest kappa for which the two-branch error estimate reaches p_error when
/// N xi_one is chosen optimally, found numerically.
double franson_kappa_min(double p_error);

/// Per-pass exponent from absorption probability: -ln(1 - p) / 2.
double xi_from_absorption_prob(double p_abs);
/// Inverse of xi_from_absorption_prob: 1 - exp(-2 xi).
double absorption_prob_from_xi(double xi);

/// kappa implied by per-segment absorption probabilities: ln(1 - p_two) / ln(1 - p_one).
double kappa_from_segment_probs(double p_two, double p_one);

}  // namespace zeno

#endif
