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
#include <numbers>
#include <stdexcept>
#include <string>

namespace zeno {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlpha = UnitSystem::fine_structure;
constexpr double kRelativeMatch = 1e-6;

bool close_relative(double a, double b, double scale) {
    return std::abs(a - b) <= kRelativeMatch * std::abs(scale);
}

}  // namespace

PhysicalScenario PhysicalScenario::from_si(double omega_one,
                                           double omega_two,
                                           double delta,
                                           double delta_control,
                                           double ell_atom_m,
                                           double area_m2,
                                           double mass_kg,
                                           double scatter_constant) {
    PhysicalScenario sc;
    sc.omega_one = omega_one;
    sc.omega_two = omega_two;
    sc.delta = delta;
    sc.delta_control = delta_control;
    sc.e12 = omega_one + delta;
    sc.e23 = omega_two - delta;
    sc.ell_atom = UnitSystem::length_to_time(ell_atom_m);
    sc.area = UnitSystem::area_to_time2(area_m2);
    sc.mass = UnitSystem::mass_to_natural(mass_kg);
    sc.scatter_constant = scatter_constant;
    return sc;
}

PhysicalScenario PhysicalScenario::defaults() {
    const double lambda = UnitSystem::from_nm(500);
    const double omega = UnitSystem::wavelength_to_angular(lambda);
    return from_si(omega,
                   omega,
                   3e12,
                   3e13,
                   UnitSystem::from_bohr(6),
                   (lambda / 2) * (lambda / 2),
                   UnitSystem::electron_mass);
}

void PhysicalScenario::validate() const {
    if (!(omega_one > 0 && omega_two > 0 && e12 > 0 && e23 > 0)) {
        throw std::domain_error("photon frequencies and level spacings must be positive");
    }
    if (!(ell_atom > 0 && area > 0)) {
        throw std::domain_error("dipole length and area must be positive");
    }
    if (!(scatter_constant > 0)) {
        throw std::domain_error("scatter_constant must be positive");
    }
    if (!close_relative(omega_one + omega_two, e12 + e23, e12 + e23)) {
        throw std::domain_error("resonance violated: omega_one + omega_two != e12 + e23");
    }
    if (!close_relative(delta, e12 - omega_one, delta)) {
        throw std::domain_error("detuning must equal e12 - omega_one");
    }
}

PumpConfig PumpConfig::defaults(const PhysicalScenario &sc) {
    PumpConfig p;
    p.omega_one = sc.omega_one;
    p.omega_two = sc.omega_two;
    p.delta = 3e14;
    p.intensity_one = UnitSystem::intensity_to_natural(1e10);
    p.intensity_two = UnitSystem::intensity_to_natural(1e10);
    const double c = UnitSystem::speed_of_light;
    p.wave_number_sum_per_m = (sc.omega_one + sc.omega_two) / c;
    return p;
}

void PumpConfig::validate(const PhysicalScenario &sc) const {
    if (!(omega_one > 0 && omega_two > 0)) {
        throw std::domain_error("pump frequencies must be positive");
    }
    if (!(intensity_one >= 0 && intensity_two >= 0)) {
        throw std::domain_error("pump intensities must be >= 0");
    }
    const double photons = sc.omega_one + sc.omega_two;
    if (!close_relative(omega_one + omega_two, photons, photons)) {
        throw std::domain_error("pump frequencies must sum to the photon frequencies");
    }
}

double p_two_photon(const PhysicalScenario &sc) {
    sc.validate();
    if (sc.delta == 0) {
        throw std::domain_error("two-photon probability diverges at zero detuning");
    }
    const double ell2 = sc.ell_atom * sc.ell_atom;
    const double geometry = (ell2 / sc.area) * (ell2 / sc.area);
    const double spacing = (sc.e12 * sc.e23 / sc.delta) * (sc.e12 * sc.e23 / sc.delta);
    return 4 * kAlpha * kAlpha / (kPi * kPi * sc.omega_one * sc.omega_two) * spacing * geometry;
}

double one_photon_ratio(const PhysicalScenario &sc) {
    sc.validate();
    return 1.0 / (sc.scatter_constant * kPi * sc.omega_one * sc.omega_two * sc.area);
}

std::int64_t required_repetitions(double kappa, const PhysicalScenario &sc) {
    if (!(kappa >= 1)) {
        throw std::domain_error("kappa must be >= 1");
    }
    return static_cast<std::int64_t>(std::ceil(kappa / one_photon_ratio(sc)));
}

RepetitionGain repetition_scaling(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("repetition count must be >= 1");
    }
    const double v = static_cast<double>(n);
    return {v * v, v};
}

bool phase_match(double k_sum, double length, double tolerance) {
    if (!(length > 0)) {
        throw std::domain_error("length must be positive");
    }
    const double turns = k_sum * length / (2 * kPi);
    const double nearest = std::round(turns);
    return nearest >= 1 && std::abs(turns - nearest) <= tolerance;
}

PhaseMatchReport phase_match_report(double k_one, double k_two, double length, double tolerance) {
    return {phase_match(k_one, length, tolerance),
            phase_match(k_two, length, tolerance),
            phase_match(k_one + k_two, length, tolerance)};
}

double collective_enhancement(double total, double excitations) {
    if (!(excitations >= 0 && excitations <= total)) {
        throw std::domain_error("excitations must lie in [0, S]");
    }
    return (total - excitations) * (excitations + 1);
}

double collective_enhancement(const EnsembleConfig &ens) {
    return collective_enhancement(ens.total_active, ens.excitations);
}

double pump_excitation_ratio(const PhysicalScenario &sc, const PumpConfig &pump) {
    pump.validate(sc);
    if (pump.delta == 0) {
        throw std::domain_error("pump detuning must be non-zero");
    }
    const double amplitude = 4 * kPi * kAlpha * sc.e12 * sc.e23 * sc.ell_atom * sc.ell_atom /
                             (pump.omega_one * pump.omega_two * (pump.omega_one + pump.omega_two) * pump.delta);
    return amplitude * amplitude * pump.intensity_one * pump.intensity_two;
}

double min_pump_detuning(double intensity, double ell_atom) {
    if (!(intensity >= 0)) {
        throw std::domain_error("intensity must be >= 0");
    }
    return std::sqrt(4 * kPi * kAlpha * intensity) * ell_atom;
}

MoleculeCount molecule_count(const EnsembleConfig &ens, double area_m2) {
    if (!(area_m2 > 0 && ens.thickness_m > 0 && ens.number_density_per_m3 > 0)) {
        throw std::domain_error("geometry and density must be positive");
    }
    const double total = ens.number_density_per_m3 * area_m2 * ens.thickness_m;
    return {total, total * ens.active_fraction};
}

double interference_frequency(double e12, double mass, double ell_atom) {
    const double radicand = 1 - 2 * mass * ell_atom * ell_atom * e12;
    if (radicand < 0) {
        throw std::domain_error("2 m ell^2 e12 = " + std::to_string(1 - radicand) + " exceeds 1");
    }
    return e12 * std::sqrt(radicand);
}

}  // namespace zeno
