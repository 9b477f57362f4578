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

#include "zeno/commands.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "zeno/design.h"
#include "zeno/oracle.h"

namespace zeno::cli {

using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json outcome_json(const ScenarioOutcome &o) {
    return {{"p_success", o.p_success},
            {"p_absorbed", o.p_absorbed},
            {"p_wrong_branch", o.p_wrong_branch},
            {"p_control_lost", o.p_control_lost},
            {"p_failure", o.failure()}};
}

json amplitudes_json(const BranchAmplitudes &a) {
    return {{"upper", a.upper}, {"middle", a.middle}, {"lower", a.lower}};
}

json optimization_json(const OptimizationResult &r) {
    return {{"epsilon_rad", r.epsilon},
            {"xi_one", r.xi_one},
            {"xi_two", r.xi_two},
            {"xi_control", r.xi_control},
            {"kappa", r.kappa},
            {"achieved_error", r.achieved_error},
            {"grid_kappa", r.grid_kappa},
            {"evaluations", r.evaluations},
            {"converged", r.converged},
            {"p_two_segment", absorption_prob_from_xi(r.xi_two)},
            {"p_one_segment", absorption_prob_from_xi(r.xi_one)}};
}

void simulate(const ConfigDocument &doc, Report &report) {
    const GateConfig &g = *doc.gate;
    const ErrorBudget budget = gate_error(g);
    json scenarios = json::object();
    for (Scenario s : kAllScenarios) {
        json entry = outcome_json(budget.at(s));
        entry["output"] = amplitudes_json(propagate(g, control_present(s), BranchAmplitudes::basis(input_branch(s))));
        scenarios[std::string(scenario_name(s))] = entry;
        const auto &o = budget.at(s);
        report.table.rows.push_back({std::string(scenario_name(s)), o.p_success, o.p_absorbed, o.p_wrong_branch,
                                     o.p_control_lost, o.failure()});
    }
    report.table.columns = {"scenario", "p_success", "p_absorbed", "p_wrong_branch", "p_control_lost",
                            "p_failure"};

    json entangling;
    try {
        const auto input = oracle::DensityState::product(Eigen::Vector3cd(1, 0, 0),
                                                         Eigen::Vector2cd(M_SQRT1_2, M_SQRT1_2));
        const auto c = oracle::gate_concurrence(g, input);
        entangling = {{"concurrence", c.concurrence}, {"postselect_probability", c.postselect_probability}};
    } catch (const oracle::degenerate_postselection &e) {
        entangling = {{"concurrence", nullptr}, {"note", e.what()}};
    }

    report.result = {{"scenarios", scenarios},
                     {"p_error_sum", budget.p_error_sum},
                     {"p_error_max", budget.p_error_max},
                     {"kappa", g.kappa()},
                     {"control_survival", control_survival(g)},
                     {"p_two_segment", absorption_prob_from_xi(g.xi_two)},
                     {"p_one_segment", absorption_prob_from_xi(g.xi_one)},
                     {"superposed_control", entangling}};
}

void optimize(const ConfigDocument &doc, Report &report) {
    const auto r = minimize_kappa(*doc.optimization);
    report.result = optimization_json(r);
    report.table.columns = {"segments",    "target_error", "aggregate",     "epsilon_rad",   "xi_one",
                            "xi_two",      "xi_control",   "kappa",         "achieved_error", "p_two_segment",
                            "p_one_segment"};
    const auto &p = *doc.optimization;
    report.table.rows.push_back({p.segments, p.target_error, std::string(aggregate_name(p.aggregate)), r.epsilon,
                                 r.xi_one, r.xi_two, r.xi_control, r.kappa, r.achieved_error,
                                 absorption_prob_from_xi(r.xi_two), absorption_prob_from_xi(r.xi_one)});
}

void table1(const ConfigDocument &doc, Report &report) {
    const auto rows = reproduce_table1(to_physical(*doc.scenario));
    report.table.columns = {"p_error", "segments", "p_two_segment", "p_one_segment", "kappa", "repetitions"};
    json out = json::array();
    for (const auto &row : rows) {
        json entry = {{"p_error", row.p_error},
                      {"segments", row.segments},
                      {"p_two_segment", row.p_two_segment},
                      {"p_one_segment", row.p_one_segment},
                      {"kappa", row.kappa},
                      {"repetitions", row.repetitions},
                      {"detail", optimization_json(row.detail)}};
        out.push_back(entry);
        report.table.rows.push_back({row.p_error, row.segments, row.p_two_segment, row.p_one_segment, row.kappa,
                                     row.repetitions});
    }
    report.result = {{"rows", out}};
}

void rates(const ConfigDocument &doc, Report &report) {
    const PhysicalScenario sc = to_physical(*doc.scenario);
    const PumpConfig pump = to_physical(*doc.pump);
    EnsembleConfig ens = to_physical(*doc.ensemble);
    const double area_m2 = UnitSystem::time2_to_area(sc.area);
    const MoleculeCount molecules = molecule_count(ens, area_m2);
    const double pump_ratio = pump_excitation_ratio(sc, pump);
    if (!doc.ensemble->total_active) {
        ens.total_active = molecules.active;
    }
    if (!doc.ensemble->excitations) {
        ens.excitations = ens.total_active * pump_ratio;
    }

    auto &t = report.table;
    t.columns = {"quantity", "value", "unit"};
    auto add = [&](const std::string &name, const json &value, const std::string &unit) {
        t.rows.push_back({name, value, unit});
    };

    json reps = json::array();
    for (double k : doc.rates->kappas) {
        const auto n = required_repetitions(k, sc);
        const auto gain = repetition_scaling(n);
        reps.push_back({{"kappa", k},
                        {"repetitions", n},
                        {"coherent_gain", gain.coherent_gain},
                        {"incoherent_gain", gain.incoherent_gain}});
        add("repetitions_kappa_" + json(round_sig12(k)).dump(), n, "1");
    }

    const double k_one = sc.omega_one / UnitSystem::speed_of_light;
    const double k_two = sc.omega_two / UnitSystem::speed_of_light;
    const auto pm = phase_match_report(k_one, k_two, UnitSystem::from_um(doc.rates->path_length_um),
                                       doc.tolerances.phase_match);

    json interference;
    try {
        interference = interference_frequency(sc.e12, sc.mass, sc.ell_atom);
    } catch (const std::domain_error &) {
        interference = nullptr;
    }

    const double p2 = p_two_photon(sc);
    const double ratio = one_photon_ratio(sc);
    const double detuning_floor = min_pump_detuning(pump.intensity_one, sc.ell_atom);
    const double enhancement = collective_enhancement(ens);
    report.result = {{"p_two_photon", p2},
                     {"one_photon_ratio", ratio},
                     {"repetitions", reps},
                     {"pump_excitation_ratio", pump_ratio},
                     {"min_pump_detuning_hz_angular", detuning_floor},
                     {"pump_detuning_ok", std::abs(pump.delta) >= detuning_floor},
                     {"molecules_total", molecules.total},
                     {"molecules_active", molecules.active},
                     {"total_active", ens.total_active},
                     {"excitations", ens.excitations},
                     {"collective_enhancement", enhancement},
                     {"effective_coupling_hz_angular", ens.effective_coupling},
                     {"phase_match", {{"first", pm.first}, {"second", pm.second}, {"sum", pm.sum}}},
                     {"interference_frequency_hz_angular", interference}};
    add("p_two_photon", p2, "1");
    add("one_photon_ratio", ratio, "1");
    add("pump_excitation_ratio", pump_ratio, "1");
    add("min_pump_detuning", detuning_floor, "s^-1");
    add("molecules_total", molecules.total, "1");
    add("molecules_active", molecules.active, "1");
    add("excitations", ens.excitations, "1");
    add("collective_enhancement", enhancement, "1");
    add("phase_match_sum", pm.sum, "bool");
    add("interference_frequency", interference, "s^-1");
}

void sweep(const ConfigDocument &doc, Report &report) {
    const auto &s = *doc.sweep;
    const auto rows = tradeoff_curve(s.target_error, s.segments, s.aggregate);
    report.table.columns = {"segments", "feasible", "kappa", "epsilon_rad", "xi_one", "xi_two", "achieved_error",
                            "p_two_segment", "p_one_segment"};
    json out = json::array();
    int feasible = 0;
    for (const auto &row : rows) {
        if (row.result) {
            ++feasible;
            const auto &r = *row.result;
            json entry = optimization_json(r);
            entry["segments"] = row.segments;
            entry["feasible"] = true;
            out.push_back(entry);
            report.table.rows.push_back({row.segments, true, r.kappa, r.epsilon, r.xi_one, r.xi_two,
                                         r.achieved_error, absorption_prob_from_xi(r.xi_two),
                                         absorption_prob_from_xi(r.xi_one)});
        } else {
            out.push_back({{"segments", row.segments}, {"feasible", false}, {"reason", row.infeasible_reason}});
            report.table.rows.push_back({row.segments, false, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                                         nullptr});
        }
    }
    report.result = {{"rows", out}};
    if (feasible == 0) {
        throw infeasible_problem("no segment count in the sweep is feasible");
    }
}

void franson(const ConfigDocument &doc, Report &report) {
    const auto &f = *doc.franson;
    const double k_three = kappa_required(f.target_error);
    const double k_two = franson_kappa_min(f.target_error);
    const auto law = asymptotic_params(f.target_error, f.segments);
    const double estimate = franson_error(f.segments, law.xi_one, law.xi_two);
    report.result = {{"kappa_three_branch", k_three},
                     {"kappa_two_branch", k_two},
                     {"ratio", k_two / k_three},
                     {"two_branch_error_at_three_branch_law", estimate},
                     {"nonphysical", estimate > 1}};
    report.table.columns = {"target_error", "segments", "kappa_three_branch", "kappa_two_branch", "ratio",
                            "two_branch_error_at_three_branch_law", "nonphysical"};
    report.table.rows.push_back({f.target_error, f.segments, k_three, k_two, k_two / k_three, estimate,
                                 estimate > 1});
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw usage_error("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void fail(Report &report, int exit_code, std::string_view kind, const std::vector<std::string> &messages) {
    report.exit_code = exit_code;
    report.errors.push_back(error_record(kind, messages));
    report.result = nullptr;
    report.table = {};
}

}  // namespace

void apply_overrides(Command command, const Overrides &o, ConfigDocument &doc) {
    auto reject = [&](bool given, const char *flag) {
        if (given) {
            throw usage_error(std::string(flag) + " does not apply to " + std::string(command_name(command)));
        }
    };
    auto single_segment = [&]() -> std::optional<int> {
        if (o.segments.empty()) {
            return std::nullopt;
        }
        if (o.segments.size() > 1) {
            throw usage_error("--segments may be repeated only for sweep");
        }
        return o.segments.front();
    };
    switch (command) {
        case Command::simulate: {
            reject(o.aggregate.has_value(), "--aggregate");
            const auto n = single_segment();
            if (!doc.gate) {
                if (!n || !o.target_error) {
                    throw usage_error("simulate needs a gate section or both --segments and --target-error");
                }
                doc.gate = asymptotic_params(*o.target_error, *n).to_config(*n);
            } else {
                reject(o.target_error.has_value(), "--target-error with a gate section");
                if (n) {
                    doc.gate->segments = *n;
                }
            }
            doc.gate->validate();
            break;
        }
        case Command::optimize: {
            resolve_defaults(command, doc);
            if (const auto n = single_segment()) {
                doc.optimization->segments = *n;
            }
            if (o.target_error) {
                doc.optimization->target_error = *o.target_error;
            }
            if (o.aggregate) {
                doc.optimization->aggregate = *o.aggregate;
            }
            doc.optimization->validate();
            break;
        }
        case Command::sweep: {
            resolve_defaults(command, doc);
            if (!o.segments.empty()) {
                doc.sweep->segments = o.segments;
            }
            if (o.target_error) {
                doc.sweep->target_error = *o.target_error;
            }
            if (o.aggregate) {
                doc.sweep->aggregate = *o.aggregate;
            }
            for (int n : doc.sweep->segments) {
                OptimizationProblem{n, doc.sweep->target_error, doc.sweep->aggregate, {}}.validate();
            }
            break;
        }
        case Command::franson: {
            reject(o.aggregate.has_value(), "--aggregate");
            resolve_defaults(command, doc);
            if (const auto n = single_segment()) {
                doc.franson->segments = *n;
            }
            if (o.target_error) {
                doc.franson->target_error = *o.target_error;
            }
            OptimizationProblem{doc.franson->segments, doc.franson->target_error, ErrorAggregate::max, {}}.validate();
            break;
        }
        case Command::table1:
        case Command::rates:
            reject(!o.segments.empty(), "--segments");
            reject(o.target_error.has_value(), "--target-error");
            reject(o.aggregate.has_value(), "--aggregate");
            break;
    }
    resolve_defaults(command, doc);
}

Report run(const RunConfig &config) {
    Report report;
    report.command = std::string(command_name(config.command));
    ConfigDocument doc = config.document;
    resolve_defaults(config.command, doc);
    report.config = emit_config(doc);
    try {
        switch (config.command) {
            case Command::simulate:
                if (!doc.gate) {
                    throw usage_error("simulate needs a gate section");
                }
                simulate(doc, report);
                break;
            case Command::optimize:
                optimize(doc, report);
                break;
            case Command::table1:
                table1(doc, report);
                break;
            case Command::rates:
                rates(doc, report);
                break;
            case Command::sweep:
                sweep(doc, report);
                break;
            case Command::franson:
                franson(doc, report);
                break;
        }
    } catch (const infeasible_problem &e) {
        fail(report, kExitInfeasible, "infeasible", {e.what()});
    } catch (const usage_error &e) {
        fail(report, kExitInvalid, "usage", {e.what()});
    } catch (const std::invalid_argument &e) {
        fail(report, kExitInvalid, "validation", {e.what()});
    } catch (const std::domain_error &e) {
        fail(report, kExitInvalid, "domain", {e.what()});
    }
    return report;
}

Report invoke(Command command, const std::string &config_path, const Overrides &overrides) {
    RunConfig config;
    config.command = command;
    config.input_path = config_path;
    try {
        if (!config_path.empty()) {
            config.document = parse_config(read_file(config_path));
        }
        apply_overrides(command, overrides, config.document);
    } catch (const config_error &e) {
        Report report;
        report.command = std::string(command_name(command));
        report.config = nullptr;
        fail(report, kExitInvalid, e.kind == config_error::Kind::parse ? "parse" : "validation", e.messages);
        return report;
    } catch (const std::exception &e) {
        Report report;
        report.command = std::string(command_name(command));
        report.config = nullptr;
        const bool usage = dynamic_cast<const usage_error *>(&e) != nullptr;
        fail(report, kExitInvalid, usage ? "usage" : "validation", {e.what()});
        return report;
    }
    return run(config);
}

std::string render(const Report &report, OutputFormat format) {
    return format == OutputFormat::json ? render_json(report) : render_csv(report);
}

}  // namespace zeno::cli
