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

#include "scenash/io.hpp"

#include <fstream>
#include <string>

namespace scenash {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

template <typename T>
void maybe(const Json& j, const char* key, T& out) {
  if (j.contains(key)) out = field<T>(j, key);
}

std::string_view rule_name(InitialRule rule) {
  switch (rule) {
    case InitialRule::kBudgetUniform: return "budget_uniform";
    case InitialRule::kMaxPower: return "max_power";
    case InitialRule::kRandom: return "random";
  }
  return "budget_uniform";
}

InitialRule rule_from_name(const std::string& name) {
  if (name == "budget_uniform") return InitialRule::kBudgetUniform;
  if (name == "max_power") return InitialRule::kMaxPower;
  if (name == "random") return InitialRule::kRandom;
  throw FormatError("unknown initial rule \"" + name + "\"");
}

}  // namespace

Json instance_to_json(const EvInstance& instance) {
  Json agents = Json::array();
  for (const auto& fs : instance.params.agents) agents.push_back({{"E", fs.demand}, {"P", fs.max_power}});
  Json scenarios = Json::array();
  for (const auto& s : instance.scenarios) scenarios.push_back({{"a", s.a}, {"b", s.b}});
  Vec b0 = instance.params.b0;
  if (b0.empty()) b0.assign(instance.params.a0.size(), 0.0);
  return {{"n", instance.params.a0.size()},
          {"N", instance.params.agents.size()},
          {"a0", instance.params.a0},
          {"b0", b0},
          {"agents", agents},
          {"scenarios", scenarios}};
}

EvInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  const auto n = field<std::size_t>(j, "n");
  const auto agent_count = field<std::size_t>(j, "N");
  EvGameParams params;
  params.a0 = field<Vec>(j, "a0");
  params.b0 = j.contains("b0") ? field<Vec>(j, "b0") : Vec(n, 0.0);
  if (params.a0.size() != n || params.b0.size() != n) throw FormatError("a0/b0 length != n");
  const Json agents = field<Json>(j, "agents");
  if (!agents.is_array() || agents.size() != agent_count) throw FormatError("agents length != N");
  for (const auto& a : agents) params.agents.push_back({field<double>(a, "E"), field<double>(a, "P"), n});
  const Json scen = field<Json>(j, "scenarios");
  if (!scen.is_array() || scen.empty()) throw FormatError("scenarios must be a nonempty array");
  std::vector<Scenario> scenarios;
  for (const auto& s : scen) {
    Scenario theta{field<Vec>(s, "a"), field<Vec>(s, "b")};
    if (theta.a.size() != n || theta.b.size() != n) throw FormatError("scenario length != n");
    scenarios.push_back(std::move(theta));
  }
  EvInstance instance{std::move(params), ScenarioSet(std::move(scenarios))};
  try {
    instance.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid instance: ") + e.what());
  }
  return instance;
}

Json solver_config_to_json(const SolverConfig& c) {
  return {{"tau", c.tau},
          {"eta0", c.eta0},
          {"gamma_inn", c.gamma_inn},
          {"gamma_out", c.gamma_out},
          {"max_inner", c.max_inner},
          {"max_outer", c.max_outer},
          {"initial_rule", rule_name(c.initial_rule)},
          {"initial_seed", c.initial_seed},
          {"subproblem_tol", c.subproblem.tolerance},
          {"subproblem_max_iterations", c.subproblem.max_iterations}};
}

void update_solver_config(SolverConfig& c, const Json& j) {
  if (!j.is_object()) throw FormatError("solver config must be a JSON object");
  maybe(j, "tau", c.tau);
  maybe(j, "eta0", c.eta0);
  maybe(j, "gamma_inn", c.gamma_inn);
  maybe(j, "gamma_out", c.gamma_out);
  maybe(j, "max_inner", c.max_inner);
  maybe(j, "max_outer", c.max_outer);
  if (j.contains("initial_rule")) c.initial_rule = rule_from_name(field<std::string>(j, "initial_rule"));
  maybe(j, "initial_seed", c.initial_seed);
  maybe(j, "subproblem_tol", c.subproblem.tolerance);
  maybe(j, "subproblem_max_iterations", c.subproblem.max_iterations);
}

Json scenario_params_to_json(const EvScenarioParams& p) {
  return {{"log_mean", p.log_mean}, {"log_sd", p.log_sd}, {"offset_lo", p.offset_lo}, {"offset_hi", p.offset_hi}};
}

void update_scenario_params(EvScenarioParams& p, const Json& j) {
  if (!j.is_object()) throw FormatError("scenario_params must be a JSON object");
  maybe(j, "log_mean", p.log_mean);
  maybe(j, "log_sd", p.log_sd);
  maybe(j, "offset_lo", p.offset_lo);
  maybe(j, "offset_hi", p.offset_hi);
}

Json agent_params_to_json(const EvAgentParams& p) {
  return {{"power_lo", p.power_lo}, {"power_hi", p.power_hi}, {"kwh_per_12h", p.kwh_per_12h}};
}

void update_agent_params(EvAgentParams& p, const Json& j) {
  if (!j.is_object()) throw FormatError("agent_params must be a JSON object");
  maybe(j, "power_lo", p.power_lo);
  maybe(j, "power_hi", p.power_hi);
  maybe(j, "kwh_per_12h", p.kwh_per_12h);
}

void update_experiment_config(ExperimentConfig& c, const Json& j) {
  if (!j.is_object()) throw FormatError("config must be a JSON object");
  maybe(j, "N", c.agents);
  maybe(j, "n", c.dim);
  maybe(j, "M", c.samples);
  maybe(j, "beta", c.beta);
  maybe(j, "seeds", c.seeds);
  if (j.contains("solver")) update_solver_config(c.solver, j.at("solver"));
  if (j.contains("scenario_params")) update_scenario_params(c.scenario_params, j.at("scenario_params"));
  if (j.contains("agent_params")) update_agent_params(c.agent_params, j.at("agent_params"));
  maybe(j, "fresh_draws", c.fresh_draws);
  maybe(j, "output_dir", c.output_dir);
  maybe(j, "n_list", c.dim_list);
  maybe(j, "M_list", c.samples_list);
}

Json experiment_config_to_json(const ExperimentConfig& c) {
  return {{"N", c.agents},
          {"n", c.dim},
          {"M", c.samples},
          {"beta", c.beta},
          {"seeds", c.seeds},
          {"solver", solver_config_to_json(c.solver)},
          {"scenario_params", scenario_params_to_json(c.scenario_params)},
          {"agent_params", agent_params_to_json(c.agent_params)},
          {"fresh_draws", c.fresh_draws},
          {"output_dir", c.output_dir},
          {"n_list", c.dim_list},
          {"M_list", c.samples_list}};
}

Json to_json(const Certificate& cert) {
  return {{"M", cert.samples},
          {"beta", cert.beta},
          {"k", cert.cardinality},
          {"epsilon", cert.epsilon},
          {"kind", to_string(cert.kind)},
          {"vacuous", cert.vacuous}};
}

Json to_json(const CompressionReport& report) {
  std::vector<std::size_t> one_based;
  for (std::size_t m : report.indices) one_based.push_back(m + 1);
  return {{"indices", one_based},
          {"d_star", report.cardinality()},
          {"method", to_string(report.method)},
          {"verification", to_string(report.verification)},
          {"equality_tolerance", report.equality_tolerance}};
}

Json to_json(const ViolationEstimate& est) {
  return {{"trials", est.trials},
          {"violations", est.violations},
          {"failures", est.failures},
          {"rate", est.rate},
          {"kind", to_string(est.kind)},
          {"seed", est.seed},
          {"heuristic_width", est.heuristic_width()}};
}

Json to_json(const SolveResult& result) {
  Json x = Json::array();
  for (std::size_t i = 0; i < result.x_star.agents(); ++i) {
    const auto block = result.x_star.block(i);
    x.push_back(Vec(block.begin(), block.end()));
  }
  const auto& last = result.trace.records.back();
  return {{"x_star", x},
          {"y_star", result.y_star.values()},
          {"gamma_star", result.gamma_star},
          {"outer_iterations", result.trace.records.size()},
          {"final_change", last.residual},
          {"vi_residual", result.trace.final_vi_residual}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace scenash
