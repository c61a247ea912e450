// Copyright 2026 The scenario-nash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings.
//
// Instance:    {"n", "N", "a0": [], "b0": [], "agents": [{"E", "P"}],
//               "scenarios": [{"a": [], "b": []}]}
// Scenario and compression indices are 1-based on the wire.
// Config readers accept partial objects; missing keys keep their defaults.

#ifndef SCENASH_IO_HPP_
#define SCENASH_IO_HPP_

#include <filesystem>
#include <stdexcept>

#include "json.hpp"
#include "scenash/certificates.hpp"
#include "scenash/compression.hpp"
#include "scenash/ev_game.hpp"
#include "scenash/experiments.hpp"
#include "scenash/solver.hpp"
#include "scenash/validation.hpp"

namespace scenash {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json instance_to_json(const EvInstance& instance);
/// Validates the decoded instance; throws FormatError on schema problems.
EvInstance instance_from_json(const Json& j);

Json solver_config_to_json(const SolverConfig& config);
void update_solver_config(SolverConfig& config, const Json& j);

Json scenario_params_to_json(const EvScenarioParams& params);
void update_scenario_params(EvScenarioParams& params, const Json& j);
Json agent_params_to_json(const EvAgentParams& params);
void update_agent_params(EvAgentParams& params, const Json& j);

/// Keys: N, n, M, beta, seeds, solver, scenario_params, agent_params,
/// fresh_draws, output_dir, n_list, M_list.
void update_experiment_config(ExperimentConfig& config, const Json& j);
Json experiment_config_to_json(const ExperimentConfig& config);

Json to_json(const Certificate& cert);
Json to_json(const CompressionReport& report);
Json to_json(const ViolationEstimate& estimate);
Json to_json(const SolveResult& result);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace scenash

#endif  // SCENASH_IO_HPP_
