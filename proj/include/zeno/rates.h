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

#ifndef ZENO_RATES_H
#define ZENO_RATES_H

#include <cstdint>

#include "zeno/units.h"

namespace zeno {

// All quantities below are in natural units (see UnitSystem) unless the
// field name says otherwise.

struct PhysicalScenario {
    double omega_one = 0;      ///< target photon angular frequency [s^-1]
    double omega_two = 0;      ///< control photon angular frequency [s^-1]
    double e12 = 0;            ///< lower level spacing [s^-1]
    double e23 = 0;            ///< upper level spacing [s^-1]
    double delta = 0;          ///< target detuning e12 - omega_one [s^-1]
    double delta_control = 0;  ///< control detuning [s^-1]
    double ell_atom = 0;       ///< dipole length [s]
    double area = 0;           ///< beam cross section [s^2]
    double mass = 0;           ///< bound particle mass [s^-1]
    double scatter_constant = 1.706;

    /// Level spacings follow from resonance: e12 = omega_one + delta,
    /// e23 = omega_two - delta.
    static PhysicalScenario from_si(double omega_one,
                                    double omega_two,
                                    double delta,
                                    double delta_control,
                                    double ell_atom_m,
                                    double area_m2,
                                    double mass_kg,
                                    double scatter_constant = 1.706);
    /// 500 nm photons, delta = 3e12 s^-1, control detuning 3e13 s^-1,
    /// six Bohr radii, diffraction-limited area (lambda / 2)^2, electron mass.
    static PhysicalScenario defaults();

    /// Throws std::domain_error when resonance or the detuning definition
    /// fails by more than 1e-6 relative, or a size is not positive.
    void validate() const;
};

struct PumpConfig {
    double omega_one = 0;      ///< [s^-1]
    double omega_two = 0;      ///< [s^-1]
    double delta = 0;          ///< pump detuning [s^-1]
    double intensity_one = 0;  ///< [s^-4]
    double intensity_two = 0;  ///< [s^-4]
    double wave_number_sum_per_m = 0;

    /// Pumps at the photon frequencies, delta' = 3e14 s^-1, 1e10 W/cm^2 each.
    static PumpConfig defaults(const PhysicalScenario &sc);
    /// Temporal phase matching against the photon pair, 1e-6 relative.
    void validate(const PhysicalScenario &sc) const;
};

struct EnsembleConfig {
    double number_density_per_m3 = 3.2e28;
    double thickness_m = 10e-6;
    double active_fraction = 0.01;
    double total_active = 0;  ///< S
    double excitations = 0;   ///< s
    double effective_coupling = 0;  ///< g, reported only
};

/// Second-order two-photon absorption probability:
/// 4 alpha^2 / (pi^2 w1 w2) * e12^2 e23^2 / delta^2 * ell^4 / A^2.
double p_two_photon(const PhysicalScenario &sc);

/// Two-photon to one-photon-scattering ratio 1 / (c_s pi w1 w2 A).
double one_photon_ratio(const PhysicalScenario &sc);

/// ceil(kappa / one_photon_ratio(sc)). kappa >= 1.
std::int64_t required_repetitions(double kappa, const PhysicalScenario &sc);

struct RepetitionGain {
    double coherent_gain = 0;    ///< n^2: phase-matched amplitudes add
    double incoherent_gain = 0;  ///< n: probabilities add
};
RepetitionGain repetition_scaling(std::int64_t n);

/// True iff k_sum * length is within tolerance * 2 pi of a positive multiple of 2 pi.
bool phase_match(double k_sum, double length, double tolerance);

struct PhaseMatchReport {
    bool first = false;
    bool second = false;
    bool sum = false;
};
PhaseMatchReport phase_match_report(double k_one, double k_two, double length, double tolerance);

/// (S - s)(s + 1): squared collective raising matrix element relative to one emitter.
double collective_enhancement(double total, double excitations);
double collective_enhancement(const EnsembleConfig &ens);

/// Pump excitation ratio s / S:
/// (4 pi alpha e12 e23 ell^2 / (w1' w2' (w1' + w2') delta'))^2 I1 I2.
double pump_excitation_ratio(const PhysicalScenario &sc, const PumpConfig &pump);

/// Lower bound sqrt(4 pi alpha I) ell on the pump detuning [s^-1].
double min_pump_detuning(double intensity, double ell_atom);

struct MoleculeCount {
    double total = 0;
    double active = 0;
};
MoleculeCount molecule_count(const EnsembleConfig &ens, double area_m2);

/// e12 sqrt(1 - 2 m ell^2 e12). Throws std::domain_error when the radicand is negative.
double interference_frequency(double e12, double mass, double ell_atom);

}  // namespace zeno

#endif
