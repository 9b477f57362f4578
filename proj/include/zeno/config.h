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

#ifndef ZENO_CONFIG_H
#define ZENO_CONFIG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zeno/gate.h"
#include "zeno/optimizer.h"
#include "zeno/rates.h"

namespace zeno::cli {

// Config documents are JSON objects with one optional object per section:
//
//   gate          segments, epsilon_rad, xi_one, xi_two, xi_control
//   optimization  segments, target_error, aggregate, control_loss, xi_control
//   sweep         target_error, segments (list), aggregate
//   franson       target_error, segments
//   scenario      omega_one_hz_angular | wavelength_one_nm, omega_two_hz_angular | wavelength_two_nm,
//                 detuning_hz_angular, control_detuning_hz_angular, e12_hz_angular, e23_hz_angular,
//                 dipole_length_nm | dipole_length_bohr, area_nm2, particle_mass_kg, scatter_constant
//   pump          omega_one_hz_angular, omega_two_hz_angular, detuning_hz_angular,
//                 intensity_one_w_per_cm2, intensity_two_w_per_cm2, wave_number_sum_per_m
//   ensemble      number_density_per_cm3, thickness_um, active_fraction,
//                 effective_coupling_hz_angular, total_active, excitations
//   rates         kappas (list), path_length_um
//   tolerances    phase_match
//
// Every physical quantity carries its unit in the key. Unknown keys are
// rejected; a key that matches a physical field without its suffix is
// reported as a missing unit suffix. Frequencies in Hz are angular.

struct config_error : std::runtime_error {
    enum class Kind { parse, validation };
    Kind kind;
    std::vector<std::string> messages;

    config_error(Kind kind, std::vector<std::string> messages);
};

enum class Command { simulate, optimize, table1, rates, sweep, franson };
std::string_view command_name(Command c);
Command parse_command(std::string_view text);

enum class OutputFormat { json, csv };
OutputFormat parse_format(std::string_view text);

struct SweepSection {
    double target_error = 0.5;
    std::vector<int> segments{10, 22};
    ErrorAggregate aggregate = ErrorAggregate::max;
    bool operator==(const SweepSection &) const = default;
};

struct FransonSection {
    double target_error = 0.5;
    int segments = 10;
    bool operator==(const FransonSection &) const = default;
};

/// Laboratory-unit scenario; the field suffix is the unit.
struct ScenarioSpec {
    double omega_one_hz_angular = 0;
    double omega_two_hz_angular = 0;
    double detuning_hz_angular = 3e12;
    double control_detuning_hz_angular = 3e13;
    double e12_hz_angular = 0;
    double e23_hz_angular = 0;
    double dipole_length_nm = 0;
    double area_nm2 = 0;
    double particle_mass_kg = UnitSystem::electron_mass;
    double scatter_constant = 1.706;

    /// 500 nm photons, six Bohr radii, (lambda / 2)^2 focus, levels on resonance.
    static ScenarioSpec defaults();
    bool operator==(const ScenarioSpec &) const = default;
};

struct PumpSpec {
    double omega_one_hz_angular = 0;
    double omega_two_hz_angular = 0;
    double detuning_hz_angular = 3e14;
    double intensity_one_w_per_cm2 = 1e10;
    double intensity_two_w_per_cm2 = 1e10;
    double wave_number_sum_per_m = 0;

    static PumpSpec defaults(const ScenarioSpec &scenario);
    bool operator==(const PumpSpec &) const = default;
};

struct EnsembleSpec {
    double number_density_per_cm3 = 3.2e22;
    double thickness_um = 10;
    double active_fraction = 0.01;
    double effective_coupling_hz_angular = 0;
    /// S and s; derived from the geometry and the pump when absent.
    std::optional<double> total_active;
    std::optional<double> excitations;
    bool operator==(const EnsembleSpec &) const = default;
};

struct RatesSection {
    std::vector<double> kappas{12, 75, 760};
    /// Repetition path length for the phase-matching report.
    double path_length_um = 1000.25;
    bool operator==(const RatesSection &) const = default;
};

struct Tolerances {
    double phase_match = 1e-3;
    bool operator==(const Tolerances &) const = default;
};

struct ConfigDocument {
    std::optional<GateConfig> gate;
    std::optional<OptimizationProblem> optimization;
    std::optional<SweepSection> sweep;
    std::optional<FransonSection> franson;
    std::optional<ScenarioSpec> scenario;
    std::optional<PumpSpec> pump;
    std::optional<EnsembleSpec> ensemble;
    std::optional<RatesSection> rates;
    Tolerances tolerances;

    bool operator==(const ConfigDocument &) const = default;
};

/// Parse and validate a config document. Throws config_error.
ConfigDocument parse_config(std::string_view text);

/// Canonical JSON for a document (sorted keys, full precision). Parsing the
/// emitted text yields an equal document.
nlohmann::json emit_config(const ConfigDocument &doc);

/// Fill every section the command reads with defaults when absent.
void resolve_defaults(Command command, ConfigDocument &doc);

PhysicalScenario to_physical(const ScenarioSpec &spec);
PumpConfig to_physical(const PumpSpec &spec);
EnsembleConfig to_physical(const EnsembleSpec &spec);

struct RunConfig {
    Command command = Command::simulate;
    std::string input_path;
    std::string output_path;
    OutputFormat format = OutputFormat::json;
    ConfigDocument document;
};

}  // namespace zeno::cli

#endif
