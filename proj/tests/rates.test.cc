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

#include "zeno/rates.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace zeno;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAlpha = 7.2973525693e-3;
constexpr double kC = 299792458.0;
constexpr double kHbar = 1.054571817e-34;
constexpr double kBohr = 5.29177210903e-11;
constexpr double kElectron = 9.1093837015e-31;

double omega_500nm() {
    return 2 * kPi * kC / 500e-9;
}

// SI-only evaluation: lengths in m, frequencies in s^-1, intensity in W/m^2.
double p_two_photon_si(double w1, double w2, double delta, double ell_m, double area_m2) {
    const double e12 = w1 + delta;
    const double e23 = w2 - delta;
    const double geo = ell_m * ell_m / area_m2;
    const double spacing = e12 * e23 / delta;
    return 4 * kAlpha * kAlpha / (kPi * kPi * w1 * w2) * spacing * spacing * geo * geo;
}

double pump_ratio_si(double e12, double e23, double ell_m, double w1p, double w2p, double dp, double i1, double i2) {
    const double amp =
        4 * kPi * kAlpha * e12 * e23 * ell_m * ell_m * std::sqrt(i1 * i2) / kHbar / (w1p * w2p * (w1p + w2p) * dp);
    return amp * amp;
}

PhysicalScenario scenario_with(double delta, double area_m2, double ell_m) {
    return PhysicalScenario::from_si(omega_500nm(), omega_500nm(), delta, 3e13, ell_m, area_m2, kElectron);
}

}  // namespace

TEST(rates, default_scenario_is_consistent) {
    const auto sc = PhysicalScenario::defaults();
    EXPECT_NO_THROW(sc.validate());
    EXPECT_NEAR(sc.omega_one / omega_500nm(), 1, 1e-15);
    EXPECT_NEAR(sc.e12 + sc.e23, sc.omega_one + sc.omega_two, 1);
    EXPECT_NEAR(sc.area * kC * kC, 250e-9 * 250e-9, 1e-26);
    auto broken = sc;
    broken.e12 *= 1.001;
    EXPECT_THROW(broken.validate(), std::domain_error);
}

TEST(rates, p_two_photon_default) {
    const double want = p_two_photon_si(omega_500nm(), omega_500nm(), 3e12, 6 * kBohr, 250e-9 * 250e-9);
    const double got = p_two_photon(PhysicalScenario::defaults());
    EXPECT_NEAR(got / want, 1, 1e-10);
    EXPECT_NEAR(got, 8.86e-11, 0.01e-11);
}

TEST(rates, p_two_photon_scaling) {
    const double a = 250e-9 * 250e-9;
    const double base = p_two_photon(scenario_with(3e12, a, 6 * kBohr));
    const double far = p_two_photon(scenario_with(3e13, a, 6 * kBohr));
    EXPECT_NEAR(far / base, p_two_photon_si(omega_500nm(), omega_500nm(), 3e13, 6 * kBohr, a) /
                                p_two_photon_si(omega_500nm(), omega_500nm(), 3e12, 6 * kBohr, a), 1e-10);
    EXPECT_NEAR(base / far, 100, 0.02);
    EXPECT_NEAR(base / p_two_photon(scenario_with(3e12, 2 * a, 6 * kBohr)), 4, 1e-10);
    EXPECT_NEAR(p_two_photon(scenario_with(3e12, a, 12 * kBohr)) / base, 16, 1e-10);
    auto resonant = PhysicalScenario::defaults();
    resonant.delta = 0;
    resonant.e12 = resonant.omega_one;
    resonant.e23 = resonant.omega_two;
    EXPECT_THROW(p_two_photon(resonant), std::domain_error);
}

TEST(rates, one_photon_ratio_values) {
    auto sc = PhysicalScenario::defaults();
    sc.scatter_constant = 1;
    EXPECT_NEAR(one_photon_ratio(sc), 1 / (kPi * kPi * kPi), 1e-14);
    EXPECT_NEAR(1 / one_photon_ratio(PhysicalScenario::defaults()), 1.706 * kPi * kPi * kPi, 1e-10);
    EXPECT_NEAR(1 / one_photon_ratio(PhysicalScenario::defaults()), 52.9, 0.01);
}

TEST(rates, repetitions_reproduce_table_column) {
    const auto sc = PhysicalScenario::defaults();
    const double per_kappa = 1.706 * kPi * kPi * kPi;
    const std::pair<double, double> rows[] = {{12, 635}, {75, 3970}, {760, 40231}};
    for (const auto &[kappa, paper] : rows) {
        const auto n = required_repetitions(kappa, sc);
        EXPECT_EQ(n, static_cast<std::int64_t>(std::ceil(kappa * per_kappa)));
        EXPECT_NEAR(n / paper, 1, 0.05) << kappa;
        EXPECT_NEAR(static_cast<double>(n) / kappa, 52.9, 0.1);
    }
    EXPECT_EQ(required_repetitions(1, sc), 53);
    EXPECT_THROW(required_repetitions(0.5, sc), std::domain_error);
}

TEST(rates, repetition_gains) {
    EXPECT_EQ(repetition_scaling(1).coherent_gain, 1);
    EXPECT_EQ(repetition_scaling(1).incoherent_gain, 1);
    EXPECT_EQ(repetition_scaling(10).coherent_gain, 100);
    EXPECT_EQ(repetition_scaling(10).incoherent_gain, 10);
    EXPECT_THROW(repetition_scaling(0), std::domain_error);
}

TEST(rates, phase_matching) {
    const double length = 1e-3;
    EXPECT_TRUE(phase_match(4 * kPi / length, length, 1e-9));
    EXPECT_FALSE(phase_match(3 * kPi / length, length, 1e-3));
    EXPECT_FALSE(phase_match(0, length, 1e-3));
    const auto r = phase_match_report(2 * kPi * 2.3 / length, 2 * kPi * 2.7 / length, length, 1e-6);
    EXPECT_FALSE(r.first);
    EXPECT_FALSE(r.second);
    EXPECT_TRUE(r.sum);
}

TEST(rates, collective_enhancement_values) {
    EXPECT_EQ(collective_enhancement(1, 0), 1);
    EXPECT_NEAR(collective_enhancement(2e8, 4000), (2e8 - 4000) * 4001.0, 1);
    EXPECT_NEAR(collective_enhancement(2e8, 4000), 8.0e11, 0.01e11);
    EXPECT_NEAR(collective_enhancement(1e12, 1e6) / (1e12 * 1e6), 1, 1e-11);
    EXPECT_THROW(collective_enhancement(10, 11), std::domain_error);
    EnsembleConfig ens;
    ens.total_active = 100;
    ens.excitations = 3;
    EXPECT_EQ(collective_enhancement(ens), 97 * 4);
}

TEST(rates, pump_excitation_ratio_default) {
    const auto sc = PhysicalScenario::defaults();
    const auto pump = PumpConfig::defaults(sc);
    const double want =
        pump_ratio_si(sc.e12, sc.e23, 6 * kBohr, sc.omega_one, sc.omega_two, 3e14, 1e14, 1e14);
    EXPECT_NEAR(pump_excitation_ratio(sc, pump) / want, 1, 1e-10);
    EXPECT_NEAR(pump_excitation_ratio(sc, pump), 1.5e-5, 0.1e-5);
}

TEST(rates, pump_excitation_ratio_scaling) {
    const auto sc = PhysicalScenario::defaults();
    const auto pump = PumpConfig::defaults(sc);
    const double base = pump_excitation_ratio(sc, pump);
    auto far = pump;
    far.delta *= 10;
    EXPECT_NEAR(base / pump_excitation_ratio(sc, far), 100, 1e-9);
    auto dark = pump;
    dark.intensity_one = 0;
    EXPECT_EQ(pump_excitation_ratio(sc, dark), 0);
    auto bright = pump;
    bright.intensity_one *= 3;
    bright.intensity_two *= 5;
    EXPECT_NEAR(pump_excitation_ratio(sc, bright) / base, 15, 1e-9);
    auto off = pump;
    off.omega_one *= 1.01;
    EXPECT_THROW(pump_excitation_ratio(sc, off), std::domain_error);
}

TEST(rates, min_pump_detuning_values) {
    const double i_nat = UnitSystem::intensity_to_natural(1e10);
    const double ell = UnitSystem::length_to_time(6 * kBohr);
    const double want = std::sqrt(4 * kPi * kAlpha * 1e14 / kHbar) * 6 * kBohr;
    EXPECT_NEAR(min_pump_detuning(i_nat, ell) / want, 1, 1e-12);
    EXPECT_NEAR(min_pump_detuning(i_nat, ell), 9.36e13, 0.01e13);
    EXPECT_EQ(min_pump_detuning(0, ell), 0);
    EXPECT_NEAR(min_pump_detuning(100 * i_nat, ell) / min_pump_detuning(i_nat, ell), 10, 1e-12);
}

TEST(rates, molecule_counts) {
    EnsembleConfig ens;
    const double area = 250e-9 * 250e-9;
    const auto m = molecule_count(ens, area);
    EXPECT_NEAR(m.total, 3.2e28 * area * 10e-6, 1);
    EXPECT_NEAR(m.total / 2e10, 1, 1e-12);
    EXPECT_NEAR(m.active / 2e8, 1, 1e-12);
    ens.thickness_m = 1e-3;
    EXPECT_NEAR(molecule_count(ens, area).total / m.total, 100, 1e-9);
    ens.active_fraction = 0;
    EXPECT_EQ(molecule_count(ens, area).active, 0);
    EXPECT_THROW(molecule_count(ens, 0), std::domain_error);
}

TEST(rates, focus_trade_off) {
    EnsembleConfig ens;
    const double area = 250e-9 * 250e-9;
    for (double f : {0.5, 2.0, 10.0}) {
        const double r = one_photon_ratio(scenario_with(3e12, f * area, 6 * kBohr)) /
                         one_photon_ratio(scenario_with(3e12, area, 6 * kBohr));
        const double m = molecule_count(ens, f * area).total / molecule_count(ens, area).total;
        EXPECT_NEAR(r, 1 / f, 1e-12);
        EXPECT_NEAR(m, f, 1e-12);
        EXPECT_NEAR(r * m, 1, 1e-12);
    }
}

TEST(rates, interference_frequency_values) {
    const double e12 = omega_500nm() + 3e12;
    EXPECT_EQ(interference_frequency(e12, 0, 1e-18), e12);
    const double ell = 1e-18;
    EXPECT_NEAR(interference_frequency(e12, 0.75 / (2 * ell * ell * e12), ell) / (e12 / 2), 1, 1e-12);
    // One Bohr radius: 2 m l^2 E12 / hbar in SI.
    const double x = 2 * kElectron * kBohr * kBohr * e12 / kHbar;
    const double got = interference_frequency(e12, UnitSystem::mass_to_natural(kElectron), UnitSystem::length_to_time(kBohr));
    EXPECT_NEAR(got / (e12 * std::sqrt(1 - x)), 1, 1e-12);
    // Six Bohr radii put the radicand below zero.
    const auto sc = PhysicalScenario::defaults();
    EXPECT_NEAR(2 * sc.mass * sc.ell_atom * sc.ell_atom * sc.e12, 36 * x, 1e-9);
    EXPECT_THROW(interference_frequency(sc.e12, sc.mass, sc.ell_atom), std::domain_error);
}
