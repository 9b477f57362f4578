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

#include "zeno/config.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zeno::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kUnitSuffixes[] = {
    "_hz_angular", "_w_per_cm2", "_per_cm3", "_per_m", "_nm2", "_nm", "_um", "_rad", "_kg", "_bohr",
};

std::string_view strip_suffix(std::string_view key) {
    for (std::string_view s : kUnitSuffixes) {
        if (key.size() > s.size() && key.substr(key.size() - s.size()) == s) {
            return key.substr(0, key.size() - s.size());
        }
    }
    return {};
}

/// 1-based line of byte offset `pos`.
int line_of(std::string_view text, std::size_t pos) {
    pos = std::min(pos, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

/// Best-effort line of "key" inside "section" for diagnostics.
std::string where(std::string_view text, std::string_view section, std::string_view key) {
    std::size_t from = 0;
    if (!section.empty()) {
        const auto s = text.find("\"" + std::string(section) + "\"");
        if (s != std::string_view::npos) {
            from = s;
        }
    }
    const auto k = text.find("\"" + std::string(key) + "\"", from);
    if (k == std::string_view::npos) {
        return {};
    }
    return "line " + std::to_string(line_of(text, k)) + ": ";
}

/// Strict reader over one section object. Records every key it is asked
/// about; finish() reports the rest as unknown or as missing a unit suffix.
class SectionReader {
   public:
    SectionReader(std::string_view text, std::string section, const json &obj, std::vector<std::string> &errors)
        : text_(text), section_(std::move(section)), obj_(obj), errors_(errors) {
        if (!obj_.is_object()) {
            errors_.push_back(section_ + ": must be an object");
        }
    }

    bool has(const std::string &key) {
        known_.insert(key);
        return obj_.is_object() && obj_.contains(key);
    }

    double number(const std::string &key, double fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = obj_.at(key);
        if (!v.is_number()) {
            fail(key, "expected a number");
            return fallback;
        }
        return v.get<double>();
    }

    std::optional<double> optional_number(const std::string &key) {
        if (!has(key)) {
            return std::nullopt;
        }
        return number(key, 0);
    }

    int integer(const std::string &key, int fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = obj_.at(key);
        if (!v.is_number_integer()) {
            fail(key, "expected an integer");
            return fallback;
        }
        return v.get<int>();
    }

    std::string string(const std::string &key, std::string fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = obj_.at(key);
        if (!v.is_string()) {
            fail(key, "expected a string");
            return fallback;
        }
        return v.get<std::string>();
    }

    template <typename T>
    std::vector<T> list(const std::string &key, std::vector<T> fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = obj_.at(key);
        constexpr bool integral = std::is_integral_v<T>;
        const bool ok = v.is_array() && std::all_of(v.begin(), v.end(), [](const json &e) {
                            return integral ? e.is_number_integer() : e.is_number();
                        });
        if (!ok) {
            fail(key, integral ? "expected a list of integers" : "expected a list of numbers");
            return fallback;
        }
        return v.get<std::vector<T>>();
    }

    void fail(const std::string &key, const std::string &what) {
        errors_.push_back(where(text_, section_, key) + section_ + "." + key + ": " + what);
    }

    void finish() {
        if (!obj_.is_object()) {
            return;
        }
        std::map<std::string, std::string, std::less<>> by_base;
        for (const auto &k : known_) {
            const auto base = strip_suffix(k);
            if (!base.empty()) {
                by_base.emplace(std::string(base), k);
            }
        }
        for (const auto &[key, value] : obj_.items()) {
            if (known_.count(key)) {
                continue;
            }
            if (auto it = by_base.find(key); it != by_base.end()) {
                fail(key, "missing unit suffix (expected '" + it->second + "')");
                continue;
            }
            const auto base = strip_suffix(key);
            if (auto it = by_base.find(base); !base.empty() && it != by_base.end()) {
                fail(key, "unsupported unit suffix (expected '" + it->second + "')");
                continue;
            }
            fail(key, "unknown field");
        }
    }

   private:
    std::string_view text_;
    std::string section_;
    const json &obj_;
    std::vector<std::string> &errors_;
    std::set<std::string> known_;
};

double wavelength_nm_to_angular(double nm) {
    return UnitSystem::wavelength_to_angular(UnitSystem::from_nm(nm));
}

ControlLoss parse_control_loss(const std::string &mode, double xi, std::vector<std::string> &errors) {
    if (mode == "none") {
        return ControlLoss::none();
    }
    if (mode == "equal_to_target") {
        return ControlLoss::equal_to_target();
    }
    if (mode == "fixed") {
        return ControlLoss::fixed(xi);
    }
    errors.push_back("optimization.control_loss: expected 'none', 'equal_to_target' or 'fixed'");
    return ControlLoss::none();
}

std::string_view control_loss_name(const ControlLoss &c) {
    switch (c.kind) {
        case ControlLoss::Kind::none:
            return "none";
        case ControlLoss::Kind::equal_to_target:
            return "equal_to_target";
        case ControlLoss::Kind::fixed:
            return "fixed";
    }
    return "none";
}

std::optional<ErrorAggregate> read_aggregate(SectionReader &r, std::vector<std::string> &errors, const char *section) {
    const std::string text = r.string("aggregate", "max");
    if (text == "sum") {
        return ErrorAggregate::sum;
    }
    if (text == "max") {
        return ErrorAggregate::max;
    }
    errors.push_back(std::string(section) + ".aggregate: expected 'sum' or 'max'");
    return std::nullopt;
}

void check_probability(double p, const std::string &field, std::vector<std::string> &bad) {
    if (!(p > 0 && p < 1)) {
        bad.push_back(field + " must lie in (0, 1)");
    }
}

}  // namespace

config_error::config_error(Kind kind, std::vector<std::string> messages)
    : std::runtime_error([&] {
          std::string s = kind == Kind::parse ? "parse error" : "validation error";
          for (const auto &m : messages) {
              s += "\n  " + m;
          }
          return s;
      }()),
      kind(kind),
      messages(std::move(messages)) {
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::simulate:
            return "simulate";
        case Command::optimize:
            return "optimize";
        case Command::table1:
            return "table1";
        case Command::rates:
            return "rates";
        case Command::sweep:
            return "sweep";
        case Command::franson:
            return "franson";
    }
    return "?";
}

Command parse_command(std::string_view text) {
    for (Command c : {Command::simulate, Command::optimize, Command::table1, Command::rates, Command::sweep,
                      Command::franson}) {
        if (command_name(c) == text) {
            return c;
        }
    }
    throw config_error(config_error::Kind::parse, {"unknown command '" + std::string(text) + "'"});
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") {
        return OutputFormat::json;
    }
    if (text == "csv") {
        return OutputFormat::csv;
    }
    throw config_error(config_error::Kind::parse, {"format must be 'json' or 'csv'"});
}

ScenarioSpec ScenarioSpec::defaults() {
    ScenarioSpec s;
    s.omega_one_hz_angular = wavelength_nm_to_angular(500);
    s.omega_two_hz_angular = wavelength_nm_to_angular(500);
    s.e12_hz_angular = s.omega_one_hz_angular + s.detuning_hz_angular;
    s.e23_hz_angular = s.omega_two_hz_angular - s.detuning_hz_angular;
    s.dipole_length_nm = UnitSystem::to_nm(UnitSystem::from_bohr(6));
    s.area_nm2 = 250.0 * 250.0;
    return s;
}

PumpSpec PumpSpec::defaults(const ScenarioSpec &scenario) {
    PumpSpec p;
    p.omega_one_hz_angular = scenario.omega_one_hz_angular;
    p.omega_two_hz_angular = scenario.omega_two_hz_angular;
    p.wave_number_sum_per_m = (scenario.omega_one_hz_angular + scenario.omega_two_hz_angular) / UnitSystem::speed_of_light;
    return p;
}

ConfigDocument parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        const std::size_t line_start = text.rfind('\n', byte == 0 ? 0 : byte - 1);
        const std::size_t column = line_start == std::string_view::npos ? byte + 1 : byte - line_start;
        std::ostringstream msg;
        msg << "line " << line_of(text, byte) << ", column " << column << ": malformed document (" << e.what()
            << ")";
        throw config_error(config_error::Kind::parse, {msg.str()});
    }
    if (!root.is_object()) {
        throw config_error(config_error::Kind::parse, {"document must be a JSON object"});
    }

    std::vector<std::string> errors;
    std::vector<std::string> invalid;
    ConfigDocument doc;
    static const std::set<std::string> kSections{"gate", "optimization", "sweep", "franson", "scenario",
                                                 "pump", "ensemble", "rates", "tolerances"};
    for (const auto &[key, value] : root.items()) {
        if (!kSections.count(key)) {
            errors.push_back(where(text, "", key) + key + ": unknown section");
        }
    }

    if (root.contains("gate")) {
        SectionReader r(text, "gate", root["gate"], errors);
        GateConfig g;
        g.segments = r.integer("segments", 0);
        g.epsilon = r.number("epsilon_rad", 0);
        g.xi_one = r.number("xi_one", 0);
        g.xi_two = r.number("xi_two", 0);
        g.xi_control = r.number("xi_control", 0);
        for (const char *required : {"segments", "epsilon_rad", "xi_one", "xi_two"}) {
            if (!r.has(required)) {
                r.fail(required, "required field is missing");
            }
        }
        r.finish();
        try {
            g.validate();
        } catch (const invalid_parameter &e) {
            invalid.push_back(e.what());
        }
        doc.gate = g;
    }

    if (root.contains("optimization")) {
        SectionReader r(text, "optimization", root["optimization"], errors);
        OptimizationProblem p;
        p.segments = r.integer("segments", p.segments);
        p.target_error = r.number("target_error", p.target_error);
        p.aggregate = read_aggregate(r, errors, "optimization").value_or(ErrorAggregate::max);
        const std::string mode = r.string("control_loss", "none");
        const bool has_xi = r.has("xi_control");
        const double xi = r.number("xi_control", 0);
        if (has_xi && mode != "fixed") {
            r.fail("xi_control", "only allowed with control_loss 'fixed'");
        }
        p.control_loss = parse_control_loss(mode, xi, errors);
        r.finish();
        try {
            p.validate();
        } catch (const invalid_parameter &e) {
            invalid.push_back(std::string("optimization: ") + e.what());
        }
        doc.optimization = p;
    }

    if (root.contains("sweep")) {
        SectionReader r(text, "sweep", root["sweep"], errors);
        SweepSection s;
        s.target_error = r.number("target_error", s.target_error);
        s.segments = r.list<int>("segments", s.segments);
        s.aggregate = read_aggregate(r, errors, "sweep").value_or(ErrorAggregate::max);
        r.finish();
        check_probability(s.target_error, "sweep.target_error", invalid);
        if (s.segments.empty() || std::any_of(s.segments.begin(), s.segments.end(), [](int n) { return n < 1; })) {
            invalid.push_back("sweep.segments must be a non-empty list of integers >= 1");
        }
        doc.sweep = s;
    }

    if (root.contains("franson")) {
        SectionReader r(text, "franson", root["franson"], errors);
        FransonSection f;
        f.target_error = r.number("target_error", f.target_error);
        f.segments = r.integer("segments", f.segments);
        r.finish();
        check_probability(f.target_error, "franson.target_error", invalid);
        if (f.segments < 1) {
            invalid.push_back("franson.segments must be >= 1");
        }
        doc.franson = f;
    }

    if (root.contains("scenario")) {
        SectionReader r(text, "scenario", root["scenario"], errors);
        ScenarioSpec s = ScenarioSpec::defaults();
        auto frequency = [&](const char *omega_key, const char *wavelength_key, double fallback) {
            const bool has_omega = r.has(omega_key);
            const bool has_wavelength = r.has(wavelength_key);
            if (has_omega && has_wavelength) {
                r.fail(wavelength_key, std::string("conflicts with ") + omega_key);
            }
            if (has_wavelength) {
                const double nm = r.number(wavelength_key, 500);
                if (!(nm > 0)) {
                    invalid.push_back(std::string("scenario.") + wavelength_key + " must be positive");
                    return fallback;
                }
                return wavelength_nm_to_angular(nm);
            }
            return r.number(omega_key, fallback);
        };
        s.omega_one_hz_angular = frequency("omega_one_hz_angular", "wavelength_one_nm", s.omega_one_hz_angular);
        s.omega_two_hz_angular = frequency("omega_two_hz_angular", "wavelength_two_nm", s.omega_two_hz_angular);
        s.detuning_hz_angular = r.number("detuning_hz_angular", s.detuning_hz_angular);
        s.control_detuning_hz_angular = r.number("control_detuning_hz_angular", s.control_detuning_hz_angular);
        s.e12_hz_angular = r.number("e12_hz_angular", s.omega_one_hz_angular + s.detuning_hz_angular);
        s.e23_hz_angular = r.number("e23_hz_angular", s.omega_two_hz_angular - s.detuning_hz_angular);
        if (r.has("dipole_length_nm") && r.has("dipole_length_bohr")) {
            r.fail("dipole_length_bohr", "conflicts with dipole_length_nm");
        }
        if (r.has("dipole_length_bohr")) {
            s.dipole_length_nm = UnitSystem::to_nm(UnitSystem::from_bohr(r.number("dipole_length_bohr", 6)));
        } else {
            s.dipole_length_nm = r.number("dipole_length_nm", s.dipole_length_nm);
        }
        const double half_wavelength_nm =
            UnitSystem::to_nm(UnitSystem::angular_to_wavelength(s.omega_one_hz_angular)) / 2;
        s.area_nm2 = r.number("area_nm2", half_wavelength_nm * half_wavelength_nm);
        s.particle_mass_kg = r.number("particle_mass_kg", s.particle_mass_kg);
        s.scatter_constant = r.number("scatter_constant", s.scatter_constant);
        r.finish();
        try {
            to_physical(s);
        } catch (const std::domain_error &e) {
            invalid.push_back(std::string("scenario: ") + e.what());
        }
        doc.scenario = s;
    }

    if (root.contains("pump")) {
        const ScenarioSpec scenario = doc.scenario.value_or(ScenarioSpec::defaults());
        SectionReader r(text, "pump", root["pump"], errors);
        PumpSpec p = PumpSpec::defaults(scenario);
        p.omega_one_hz_angular = r.number("omega_one_hz_angular", p.omega_one_hz_angular);
        p.omega_two_hz_angular = r.number("omega_two_hz_angular", p.omega_two_hz_angular);
        p.detuning_hz_angular = r.number("detuning_hz_angular", p.detuning_hz_angular);
        p.intensity_one_w_per_cm2 = r.number("intensity_one_w_per_cm2", p.intensity_one_w_per_cm2);
        p.intensity_two_w_per_cm2 = r.number("intensity_two_w_per_cm2", p.intensity_two_w_per_cm2);
        p.wave_number_sum_per_m = r.number("wave_number_sum_per_m", p.wave_number_sum_per_m);
        r.finish();
        try {
            to_physical(p).validate(to_physical(scenario));
            if (p.detuning_hz_angular == 0) {
                invalid.push_back("pump.detuning_hz_angular must be non-zero");
            }
        } catch (const std::domain_error &e) {
            invalid.push_back(std::string("pump: ") + e.what());
        }
        doc.pump = p;
    }

    if (root.contains("ensemble")) {
        SectionReader r(text, "ensemble", root["ensemble"], errors);
        EnsembleSpec e;
        e.number_density_per_cm3 = r.number("number_density_per_cm3", e.number_density_per_cm3);
        e.thickness_um = r.number("thickness_um", e.thickness_um);
        e.active_fraction = r.number("active_fraction", e.active_fraction);
        e.effective_coupling_hz_angular = r.number("effective_coupling_hz_angular", e.effective_coupling_hz_angular);
        e.total_active = r.optional_number("total_active");
        e.excitations = r.optional_number("excitations");
        r.finish();
        if (!(e.number_density_per_cm3 > 0 && e.thickness_um > 0)) {
            invalid.push_back("ensemble: density and thickness must be positive");
        }
        if (!(e.active_fraction >= 0 && e.active_fraction <= 1)) {
            invalid.push_back("ensemble.active_fraction must lie in [0, 1]");
        }
        if (e.total_active && e.excitations && !(*e.excitations >= 0 && *e.excitations <= *e.total_active)) {
            invalid.push_back("ensemble: excitations must lie in [0, total_active]");
        }
        doc.ensemble = e;
    }

    if (root.contains("rates")) {
        SectionReader r(text, "rates", root["rates"], errors);
        RatesSection s;
        s.kappas = r.list<double>("kappas", s.kappas);
        s.path_length_um = r.number("path_length_um", s.path_length_um);
        r.finish();
        if (std::any_of(s.kappas.begin(), s.kappas.end(), [](double k) { return !(k >= 1); })) {
            invalid.push_back("rates.kappas must all be >= 1");
        }
        if (!(s.path_length_um > 0)) {
            invalid.push_back("rates.path_length_um must be positive");
        }
        doc.rates = s;
    }

    if (root.contains("tolerances")) {
        SectionReader r(text, "tolerances", root["tolerances"], errors);
        doc.tolerances.phase_match = r.number("phase_match", doc.tolerances.phase_match);
        r.finish();
        if (!(doc.tolerances.phase_match >= 0 && doc.tolerances.phase_match < 0.5)) {
            invalid.push_back("tolerances.phase_match must lie in [0, 0.5)");
        }
    }

    if (!errors.empty()) {
        throw config_error(config_error::Kind::parse, errors);
    }
    if (!invalid.empty()) {
        throw config_error(config_error::Kind::validation, invalid);
    }
    return doc;
}

json emit_config(const ConfigDocument &doc) {
    json root = json::object();
    if (doc.gate) {
        const auto &g = *doc.gate;
        root["gate"] = {{"segments", g.segments},
                        {"epsilon_rad", g.epsilon},
                        {"xi_one", g.xi_one},
                        {"xi_two", g.xi_two},
                        {"xi_control", g.xi_control}};
    }
    if (doc.optimization) {
        const auto &p = *doc.optimization;
        json o = {{"segments", p.segments},
                  {"target_error", p.target_error},
                  {"aggregate", aggregate_name(p.aggregate)},
                  {"control_loss", control_loss_name(p.control_loss)}};
        if (p.control_loss.kind == ControlLoss::Kind::fixed) {
            o["xi_control"] = p.control_loss.xi;
        }
        root["optimization"] = o;
    }
    if (doc.sweep) {
        root["sweep"] = {{"target_error", doc.sweep->target_error},
                         {"segments", doc.sweep->segments},
                         {"aggregate", aggregate_name(doc.sweep->aggregate)}};
    }
    if (doc.franson) {
        root["franson"] = {{"target_error", doc.franson->target_error}, {"segments", doc.franson->segments}};
    }
    if (doc.scenario) {
        const auto &s = *doc.scenario;
        root["scenario"] = {{"omega_one_hz_angular", s.omega_one_hz_angular},
                            {"omega_two_hz_angular", s.omega_two_hz_angular},
                            {"detuning_hz_angular", s.detuning_hz_angular},
                            {"control_detuning_hz_angular", s.control_detuning_hz_angular},
                            {"e12_hz_angular", s.e12_hz_angular},
                            {"e23_hz_angular", s.e23_hz_angular},
                            {"dipole_length_nm", s.dipole_length_nm},
                            {"area_nm2", s.area_nm2},
                            {"particle_mass_kg", s.particle_mass_kg},
                            {"scatter_constant", s.scatter_constant}};
    }
    if (doc.pump) {
        const auto &p = *doc.pump;
        root["pump"] = {{"omega_one_hz_angular", p.omega_one_hz_angular},
                        {"omega_two_hz_angular", p.omega_two_hz_angular},
                        {"detuning_hz_angular", p.detuning_hz_angular},
                        {"intensity_one_w_per_cm2", p.intensity_one_w_per_cm2},
                        {"intensity_two_w_per_cm2", p.intensity_two_w_per_cm2},
                        {"wave_number_sum_per_m", p.wave_number_sum_per_m}};
    }
    if (doc.ensemble) {
        const auto &e = *doc.ensemble;
        json o = {{"number_density_per_cm3", e.number_density_per_cm3},
                  {"thickness_um", e.thickness_um},
                  {"active_fraction", e.active_fraction},
                  {"effective_coupling_hz_angular", e.effective_coupling_hz_angular}};
        if (e.total_active) {
            o["total_active"] = *e.total_active;
        }
        if (e.excitations) {
            o["excitations"] = *e.excitations;
        }
        root["ensemble"] = o;
    }
    if (doc.rates) {
        root["rates"] = {{"kappas", doc.rates->kappas}, {"path_length_um", doc.rates->path_length_um}};
    }
    root["tolerances"] = {{"phase_match", doc.tolerances.phase_match}};
    return root;
}

void resolve_defaults(Command command, ConfigDocument &doc) {
    switch (command) {
        case Command::simulate:
            break;
        case Command::optimize:
            if (!doc.optimization) {
                doc.optimization = OptimizationProblem{};
            }
            break;
        case Command::table1:
            if (!doc.scenario) {
                doc.scenario = ScenarioSpec::defaults();
            }
            break;
        case Command::rates:
            if (!doc.scenario) {
                doc.scenario = ScenarioSpec::defaults();
            }
            if (!doc.pump) {
                doc.pump = PumpSpec::defaults(*doc.scenario);
            }
            if (!doc.ensemble) {
                doc.ensemble = EnsembleSpec{};
            }
            if (!doc.rates) {
                doc.rates = RatesSection{};
            }
            break;
        case Command::sweep:
            if (!doc.sweep) {
                doc.sweep = SweepSection{};
            }
            break;
        case Command::franson:
            if (!doc.franson) {
                doc.franson = FransonSection{};
            }
            break;
    }
}

PhysicalScenario to_physical(const ScenarioSpec &spec) {
    PhysicalScenario sc = PhysicalScenario::from_si(spec.omega_one_hz_angular,
                                                    spec.omega_two_hz_angular,
                                                    spec.detuning_hz_angular,
                                                    spec.control_detuning_hz_angular,
                                                    UnitSystem::from_nm(spec.dipole_length_nm),
                                                    UnitSystem::from_nm2(spec.area_nm2),
                                                    spec.particle_mass_kg,
                                                    spec.scatter_constant);
    sc.e12 = spec.e12_hz_angular;
    sc.e23 = spec.e23_hz_angular;
    sc.validate();
    return sc;
}

PumpConfig to_physical(const PumpSpec &spec) {
    PumpConfig p;
    p.omega_one = spec.omega_one_hz_angular;
    p.omega_two = spec.omega_two_hz_angular;
    p.delta = spec.detuning_hz_angular;
    p.intensity_one = UnitSystem::intensity_to_natural(spec.intensity_one_w_per_cm2);
    p.intensity_two = UnitSystem::intensity_to_natural(spec.intensity_two_w_per_cm2);
    p.wave_number_sum_per_m = spec.wave_number_sum_per_m;
    return p;
}

EnsembleConfig to_physical(const EnsembleSpec &spec) {
    EnsembleConfig e;
    e.number_density_per_m3 = UnitSystem::from_per_cm3(spec.number_density_per_cm3);
    e.thickness_m = UnitSystem::from_um(spec.thickness_um);
    e.active_fraction = spec.active_fraction;
    e.effective_coupling = spec.effective_coupling_hz_angular;
    e.total_active = spec.total_active.value_or(0);
    e.excitations = spec.excitations.value_or(0);
    return e;
}

}  // namespace zeno::cli
