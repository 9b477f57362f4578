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

#ifndef ZENO_COMMANDS_H
#define ZENO_COMMANDS_H

#include <optional>
#include <string>
#include <vector>

#include "zeno/config.h"
#include "zeno/report.h"

namespace zeno::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInfeasible = 2;

/// Command-line values that take precedence over the config document.
struct Overrides {
    std::vector<int> segments;
    std::optional<double> target_error;
    std::optional<ErrorAggregate> aggregate;
};

/// Applies overrides to the sections the command reads, then fills defaults.
/// simulate without a gate section builds one from the asymptotic laws when
/// both segments and target_error are given.
void apply_overrides(Command command, const Overrides &overrides, ConfigDocument &doc);

/// Dispatch a validated, resolved document. Never throws for domain failures;
/// they become error records with the matching exit code.
Report run(const RunConfig &config);

/// Load the config file (if any), apply overrides and run.
Report invoke(Command command, const std::string &config_path, const Overrides &overrides);

std::string render(const Report &report, OutputFormat format);

}  // namespace zeno::cli

#endif
