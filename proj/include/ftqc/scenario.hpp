#pragma once

#include <string>
#include <vector>

#include "ftqc/core_model.hpp"
#include "ftqc/factories.hpp"
#include "ftqc/logical_spec.hpp"

namespace ftqc {

/// A named problem instance: logical requirements plus failure budgets.
struct Scenario {
    std::string name;
    LogicalRequirements logical;
    ErrorBudget budget;
    std::string notes;
};

std::vector<std::string> preset_names();

/// Loads a built-in preset by name, or a scenario file by path. Scenario
/// files are JSON with a top-level "version" field; unknown fields are
/// rejected with a diagnostic naming the offending location.
Scenario load_scenario(const std::string& name_or_path);

/// Factory-model constants from a JSON config file (same conventions as
/// scenario files). Fields not present keep their defaults.
FactoryConstants load_model_config(const std::string& path);

/// Honors the FTQC_MODEL_CONFIG environment variable; compiled-in defaults
/// when it is unset.
FactoryConstants model_config_from_env();

/// Parses a duration: plain seconds (scientific notation allowed) or a
/// number with one of the suffixes us, ms, s, h, day/days.
double parse_duration_s(const std::string& text);

}  // namespace ftqc
