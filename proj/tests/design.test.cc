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
#include <random>

#include "gtest/gtest.h"

using namespace zeno;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST(design, asymptotic_params_examples) {
    const auto a = asymptotic_params(0.5, 10);
    EXPECT_NEAR(a.epsilon, 0.22214, 5e-6);
    EXPECT_NEAR(a.xi_one, 0.1, 1e-15);
    EXPECT_NEAR(a.xi_two, 1.97392, 5e-6);
    EXPECT_NEAR(asymptotic_params(0.1, 60).xi_two, 1.64493, 5e-6);
}

TEST(design, asymptotic_ratio_is_required_kappa) {
    for (double p : {0.5, 0.25, 0.1, 0.05, 0.01}) {
        for (int n : {1, 10, 60, 10000}) {
            const auto a = asymptotic_params(p, n);
            EXPECT_NEAR(a.xi_two / a.xi_one, kappa_required(p), 1e-12 * kappa_required(p));
        }
    }
}

TEST(design, kappa_required_examples) {
    EXPECT_NEAR(kappa_required(0.5), 19.739, 5e-4);
    EXPECT_NEAR(kappa_required(0.25), 78.96, 5e-3);
    // Smallest admissible probability bound still gives kappa > 1.
    EXPECT_GT(kappa_required(std::nextafter(1.0, 0.0)), 1);
    EXPECT_THROW(kappa_required(0), std::domain_error);
    EXPECT_THROW(kappa_required(1), std::domain_error);
    EXPECT_THROW(asymptotic_params(0.1, 0), std::domain_error);
}

TEST(design, franson_error_examples) {
    EXPECT_NEAR(franson_error(10, 0, 1e300), 0, 1e-299);
    EXPECT_NEAR(franson_error(10, 0.01, 1), 0.4 + 2 * kPi * kPi / 10, 1e-12);
    EXPECT_NEAR(franson_error(10, 0.01, 1), 2.374, 5e-4);
    EXPECT_THROW(franson_error(10, 0.01, 0), std::domain_error);
}

TEST(design, franson_kappa_is_sixty_four_times_larger) {
    for (double p : {0.5, 0.25, 0.1, 0.05}) {
        const double want = 32 * kPi * kPi / (p * p);
        EXPECT_NEAR(franson_kappa_min(p) / want, 1, 1e-6) << p;
        EXPECT_NEAR(franson_kappa_min(p) / kappa_required(p), 64, 64e-6) << p;
    }
}

TEST(design, franson_minimum_against_brute_force) {
    // Error at the ratio returned must reach P for the best N xi_one, and a
    // 1% smaller ratio must not.
    const double p = 0.25;
    const double k = franson_kappa_min(p);
    auto best = [](double kappa) {
        double m = INFINITY;
        for (double lu = -12; lu <= 2; lu += 1e-4) {
            const double u = std::pow(10.0, lu);
            m = std::min(m, franson_error(1, u, kappa * u));
        }
        return m;
    };
    EXPECT_LE(best(k), p * (1 + 1e-6));
    EXPECT_GT(best(0.99 * k), p);
}

TEST(design, xi_absorption_examples) {
    EXPECT_EQ(xi_from_absorption_prob(0), 0);
    EXPECT_NEAR(xi_from_absorption_prob(0.95), 1.49787, 5e-6);
    EXPECT_NEAR(xi_from_absorption_prob(0.23), 0.13067, 2e-5);
    EXPECT_THROW(xi_from_absorption_prob(1), std::domain_error);
    EXPECT_THROW(xi_from_absorption_prob(-0.1), std::domain_error);
    EXPECT_THROW(absorption_prob_from_xi(-1), std::domain_error);
}

TEST(design, xi_absorption_round_trip) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 0.999);
    for (int k = 0; k < 1000; ++k) {
        const double p = u(rng);
        EXPECT_NEAR(absorption_prob_from_xi(xi_from_absorption_prob(p)), p, 1e-12);
    }
}

TEST(design, kappa_from_table_probabilities) {
    auto oracle = [](double p2, double p1) { return std::log(1 - p2) / std::log(1 - p1); };
    EXPECT_NEAR(kappa_from_segment_probs(0.95, 0.23), oracle(0.95, 0.23), 1e-12);
    EXPECT_NEAR(kappa_from_segment_probs(0.95, 0.23), 11.46, 0.01);
    EXPECT_NEAR(kappa_from_segment_probs(0.95, 0.04), 73.4, 0.05);
    EXPECT_NEAR(kappa_from_segment_probs(0.98, 0.005), 780.5, 0.1);
    EXPECT_THROW(kappa_from_segment_probs(0.1, 0.2), std::domain_error);
    EXPECT_THROW(kappa_from_segment_probs(0.5, 0), std::domain_error);
}
