// Copyright 2026 The matusita authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "matusita/estimators.hpp"
#include "matusita/montecarlo.hpp"

namespace matusita {

/// Scenario file for `simulate`. Plain text, one `key = value` per line,
/// '#' starts a comment:
///
///   mu1 = 0
///   sigma1 = 1
///   mu2 = 2.5
///   sigma2 = 4
///   sizes = 10x10, 20x30, 100x200
///   replications = 1000        # optional, default 1000
///   seed = 20240001            # optional, default 20240001
///   estimators = all           # optional, comma separated tags
///
/// sigma values are standard deviations. Unknown or repeated keys are errors.
struct ScenarioConfig {
  ScenarioSpec spec;
  std::vector<EstimatorTag> tags;
};

ScenarioConfig parse_scenario_config(std::string_view text);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

}  // namespace matusita
