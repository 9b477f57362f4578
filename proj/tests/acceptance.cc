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

// Acceptance report: one PASS/FAIL line per criterion.
//
// Exit status is 0 once every criterion has been evaluated; pass --strict to
// turn any FAIL into a non-zero exit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "zeno/design.h"
#include "zeno/optimizer.h"
#include "zeno/oracle.h"
#include "zeno/rates.h"

using namespace zeno;

namespace {

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void verdict(int id, bool ok, const std::string &detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

oracle::TargetLevel level_of(Branch b) {
    return static_cast<oracle::TargetLevel>(static_cast<int>(b));
}

oracle::DensityState superposed_control() {
    return oracle::DensityState::product(Eigen::Vector3cd(1, 0, 0), Eigen::Vector2cd(M_SQRT1_2, M_SQRT1_2));
}

// Shared by criteria 1 and 11.
struct ChannelStats {
    double completeness = 0;
    double trace = 0;
    double min_eigenvalue = INFINITY;
    int states = 0;

    void record_channel(const GateConfig &g) {
        for (const auto &k : oracle::build_segment_channel(g)) {
            completeness = std::max(completeness, k.completeness_defect());
        }
    }
    void record_state(const oracle::DensityState &s) {
        trace = std::max(trace, std::abs(s.trace() - 1));
        min_eigenvalue = std::min(min_eigenvalue, s.min_eigenvalue());
        ++states;
    }
};

ChannelStats corpus;

void criterion_1() {
    Stopwatch t;
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> segs(1, 50);
    std::uniform_real_distribution<double> eps(1e-3, 1.5);
    std::uniform_real_distribution<double> xi(0, 1.5);
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
        const double x1 = xi(rng);
        const GateConfig g{segs(rng), eps(rng), x1, x1 + xi(rng), 0};
        corpus.record_channel(g);
        for (Scenario s : kAllScenarios) {
            const bool present = control_present(s);
            const auto c = present ? oracle::ControlLevel::present : oracle::ControlLevel::absent;
            const auto out = oracle::evolve(oracle::DensityState::basis(level_of(input_branch(s)), c), g);
            corpus.record_state(out);
            const auto amp = propagate(g, present, BranchAmplitudes::basis(input_branch(s)));
            for (Branch b : {Branch::upper, Branch::middle, Branch::lower}) {
                worst = std::max(worst, std::abs(out.population(level_of(b), c) - amp[b] * amp[b]));
            }
        }
    }
    const double secs = t.seconds();
    verdict(1, worst <= 1e-10 && secs < 10,
            "max |population - amplitude^2| = " + fmt("%.3g", worst) + " over 200 configs x 4 scenarios, " +
                fmt("%.2f", secs) + " s");
}

void criterion_2() {
    Stopwatch t;
    auto infidelity = [](int n) {
        const GateConfig g{n, kPi / (std::sqrt(2.0) * n), 0, 0, 0};
        const auto out = propagate(g, false, BranchAmplitudes::basis(Branch::upper));
        return (out.as_vector() - Eigen::Vector3d(0, 0, 1)).squaredNorm();
    };
    const double e0 = kPi / (std::sqrt(2.0) * 100);
    const Eigen::Vector3d ref = zeno_oracle::naive_power(zeno_oracle::segment(e0, 0), 100).col(0);
    const double c_exact = (ref - Eigen::Vector3d(0, 0, 1)).squaredNorm() * 100 * 100;
    // The scaled infidelity rises monotonically towards pi^2 / 8 = 1.2337,
    // so the constant carries a 5% allowance over its N = 100 value.
    const double c = 1.05 * c_exact;
    bool ok = true;
    std::string detail = "c = 1.05 x " + fmt("%.6f", c_exact) + "; N^2 infidelity:";
    for (int n : {100, 200, 500, 1000}) {
        const double scaled = infidelity(n) * n * n;
        ok = ok && scaled <= c;
        detail += " " + std::to_string(n) + "->" + fmt("%.6f", scaled);
    }
    const double secs = t.seconds();
    verdict(2, ok && secs < 1, detail + ", " + fmt("%.3f", secs) + " s");
}

std::vector<Table1Row> table_rows;

void criterion_3() {
    Stopwatch t;
    table_rows = reproduce_table1();
    const std::pair<double, double> ranges[] = {{9, 13}, {60, 80}, {600, 800}};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < table_rows.size(); ++i) {
        const auto &r = table_rows[i];
        const bool in = r.kappa >= ranges[i].first && r.kappa <= ranges[i].second;
        ok = ok && in;
        detail += "(P=" + fmt("%g", r.p_error) + ", N=" + std::to_string(r.segments) + ") kappa=" +
                  fmt("%.4f", r.kappa) + " in [" + fmt("%g", ranges[i].first) + "," + fmt("%g", ranges[i].second) +
                  "]:" + (in ? "yes" : "no") + " P2seg=" + fmt("%.4f", r.p_two_segment) +
                  " P1seg=" + fmt("%.4f", r.p_one_segment) + "; ";
    }
    const double secs = t.seconds();
    verdict(3, ok && secs < 120, detail + fmt("%.1f", secs) + " s");
}

void criterion_4() {
    const double k22 = minimize_kappa({22, 0.5, ErrorAggregate::max, ControlLoss::none()}).kappa;
    const double k10 = table_rows.at(0).kappa;
    verdict(4, k22 <= 9.5 && k22 < k10,
            "kappa(N=22, P=0.5) = " + fmt("%.4f", k22) + " <= 9.5 and < kappa(N=10) = " + fmt("%.4f", k10));
}

void criterion_5() {
    const double p2[] = {0.95, 0.95, 0.98};
    const double p1[] = {0.23, 0.04, 0.005};
    const double want[] = {11.46, 73.4, 780.5};
    const double paper[] = {12, 75, 760};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const double k = kappa_from_segment_probs(p2[i], p1[i]);
        const bool in = std::abs(k / want[i] - 1) <= 0.01 && std::abs(k / paper[i] - 1) <= 0.07;
        ok = ok && in;
        detail += fmt("%.3f", k) + " vs " + fmt("%g", paper[i]) + " (" + fmt("%+.2f", 100 * (k / paper[i] - 1)) + "%); ";
    }
    verdict(5, ok, detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    for (double p : {0.5, 0.25, 0.1}) {
        const double ratio = franson_kappa_min(p) / kappa_required(p);
        ok = ok && std::abs(ratio / 64 - 1) <= 1e-3;
        detail += "P=" + fmt("%g", p) + ": " + fmt("%.6f", ratio) + "; ";
    }
    verdict(6, ok, detail);
}

void criterion_7() {
    bool range_ok = true;
    bool shrink_ok = true;
    std::string detail;
    std::string max_detail;
    for (double p : {0.1, 0.05}) {
        const auto b3 = gate_error(asymptotic_params(p, 1000).to_config(1000));
        const auto b4 = gate_error(asymptotic_params(p, 10000).to_config(10000));
        const double d3 = std::abs(b3.p_error_sum / p - 1);
        const double d4 = std::abs(b4.p_error_sum / p - 1);
        range_ok = range_ok && d4 <= 0.3;
        shrink_ok = shrink_ok && d4 < d3;
        detail += "P=" + fmt("%g", p) + ": sum/P N=1e3 " + fmt("%.4f", b3.p_error_sum / p) + ", N=1e4 " +
                  fmt("%.4f", b4.p_error_sum / p) + "; ";
        max_detail += "P=" + fmt("%g", p) + ": max/P N=1e3 " + fmt("%.4f", b3.p_error_max / p) + ", N=1e4 " +
                      fmt("%.4f", b4.p_error_max / p) + "; ";
    }
    verdict(7, range_ok && shrink_ok,
            detail + "within 30%: " + (range_ok ? "yes" : "no") + ", deviation shrinks: " + (shrink_ok ? "yes" : "no"));
    std::printf("              (per-scenario aggregate, informational) %s\n", max_detail.c_str());
}

void criterion_8() {
    const auto sc = PhysicalScenario::defaults();
    const double kappa[] = {12, 75, 760};
    const double paper[] = {635, 3970, 40231};
    bool ok = std::abs(sc.scatter_constant - 1.706) < 1e-15;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const auto n = required_repetitions(kappa[i], sc);
        ok = ok && std::abs(n / paper[i] - 1) <= 0.05;
        detail += std::to_string(n) + " vs " + fmt("%g", paper[i]) + "; ";
    }
    verdict(8, ok, detail);
}

void criterion_9() {
    const auto sc = PhysicalScenario::defaults();
    const double p2 = p_two_photon(sc);
    const double pump = pump_excitation_ratio(sc, PumpConfig::defaults(sc));
    const double detuning = min_pump_detuning(UnitSystem::intensity_to_natural(1e10), sc.ell_atom);
    const double molecules = molecule_count(EnsembleConfig{}, UnitSystem::time2_to_area(sc.area)).total;
    // O(1e-11) read as an order of magnitude: the decade [1e-11, 1e-10), with
    // the computed value within a factor 3 of 8.9e-11.
    const bool ok = std::floor(std::log10(p2)) == -11 && p2 / 8.9e-11 <= 3 && p2 / 8.9e-11 >= 1.0 / 3 &&
                    pump / 2e-5 <= 3 && pump / 2e-5 >= 1.0 / 3 && detuning / 1e14 <= 2 && detuning / 1e14 >= 0.5 &&
                    std::abs(molecules / 2e10 - 1) <= 0.1;
    verdict(9, ok,
            "p_two_photon " + fmt("%.3g", p2) + ", pump ratio " + fmt("%.3g", pump) + ", min pump detuning " +
                fmt("%.3g", detuning) + " s^-1, molecules " + fmt("%.3g", molecules));
}

void criterion_10() {
    std::string detail;
    double c60 = 0;
    double previous = -1;
    bool monotone = true;
    for (int n : {20, 40, 60}) {
        const GateConfig g = asymptotic_params(0.1, n).to_config(n);
        corpus.record_channel(g);
        corpus.record_state(oracle::evolve(superposed_control(), g));
        const double c = oracle::gate_concurrence(g, superposed_control()).concurrence;
        monotone = monotone && c >= previous;
        previous = c;
        c60 = c;
        detail += "N=" + std::to_string(n) + ": " + fmt("%.5f", c) + "; ";
    }
    verdict(10, c60 >= 0.8 && monotone, detail);
}

void criterion_11() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> segs(1, 50);
    std::uniform_real_distribution<double> eps(1e-3, 1.5);
    std::uniform_real_distribution<double> xi(0, 1.5);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 100; ++k) {
        const double x1 = xi(rng);
        const GateConfig g{segs(rng), eps(rng), x1, x1 + xi(rng), 0.02 * xi(rng)};
        corpus.record_channel(g);
        oracle::JointVector psi = oracle::JointVector::Zero();
        for (int i = 0; i < oracle::kJointDim; ++i) {
            psi(i) = {gauss(rng), gauss(rng)};
        }
        psi.normalize();
        corpus.record_state(oracle::evolve(oracle::DensityState::pure(psi), g));
    }
    const bool ok = corpus.completeness <= 1e-12 && corpus.trace <= 1e-12 && corpus.min_eigenvalue >= -1e-10;
    verdict(11, ok,
            "max completeness defect " + fmt("%.3g", corpus.completeness) + ", max |trace - 1| " +
                fmt("%.3g", corpus.trace) + ", min eigenvalue " + fmt("%.3g", corpus.min_eigenvalue) + " over " +
                std::to_string(corpus.states) + " states");
}

void criterion_12() {
    Stopwatch t;
    const auto report = control_loss_inflation(0.1, 10000);
    bool monotone = true;
    std::string sweep;
    for (std::size_t i = 0; i < report.sweep.size(); ++i) {
        if (i > 0) {
            monotone = monotone && report.sweep[i].factor > report.sweep[i - 1].factor;
        }
        sweep += " " + fmt("%.4f", report.sweep[i].factor);
    }
    verdict(12, report.factor > 1 && monotone,
            "factor " + fmt("%.3f", report.factor) + " (reference " + fmt("%g", report.reference_factor) +
                ", not enforced); fixed xi_control sweep:" + sweep + "; " + fmt("%.1f", t.seconds()) + " s");
    std::printf("              model: %s\n", report.model.c_str());
}

}  // namespace

int main(int argc, char **argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("acceptance: %d of 12 criteria pass\n", 12 - failures);
    return strict && failures > 0 ? 1 : 0;
}
