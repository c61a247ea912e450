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

// Seeded end-to-end runs on random charging instances. Every output is a
// deterministic function of the ExperimentConfig, seeds included.
//
// CSV columns:
//   certificate table  d_star,runs,empirical_pct,eps_split_pct,eps_wait_judge_pct
//   per-seed runs      seed,d_star,verified,gamma_star,outer_iterations,violations,trials,
//                      empirical_pct,eps_split_pct,eps_wait_judge_pct
//   d* scaling         n,M,runs,mean_d_star,max_d_star,bound,within_bound,d_star_le_n
//   convergence trace  k,residual,inner_iters,eta,J_1..J_N,coordinator

#ifndef SCENASH_EXPERIMENTS_HPP_
#define SCENASH_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scenash/ev_game.hpp"
#include "scenash/solver.hpp"

namespace scenash {

struct ExperimentConfig {
  std::size_t agents = 5;    // N
  std::size_t dim = 6;       // n
  std::size_t samples = 500;  // M
  double beta = 1e-6;
  std::vector<std::uint64_t> seeds;
  SolverConfig solver;
  EvScenarioParams scenario_params;
  EvAgentParams agent_params;
  std::size_t fresh_draws = 10000;
  std::string output_dir;
  std::vector<std::size_t> dim_list;      // scaling sweep
  std::vector<std::size_t> samples_list;  // scaling sweep

  /// Throws std::invalid_argument on zero counts, beta outside (0, 1), or an
  /// empty seed list.
  void validate() const;
};

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::size_t d_star = 0;
  bool verified = false;
  double gamma_star = 0.0;
  std::size_t outer_iterations = 0;
  std::size_t violations = 0;
  std::size_t trials = 0;
  double empirical_rate = 0.0;
  double eps_split = 1.0;
  double eps_wait_judge = 1.0;
};

struct TableRow {
  std::size_t d_star = 0;
  std::size_t runs = 0;
  double empirical_pct = 0.0;  // mean over the runs in the group
  double eps_split_pct = 0.0;
  double eps_wait_judge_pct = 0.0;
};

struct CertificateTable {
  std::vector<SeedOutcome> runs;  // seed order
  std::vector<TableRow> rows;     // ascending d*
  std::vector<std::uint64_t> failed_seeds;

  void write_csv(std::ostream& out) const;
  void write_runs_csv(std::ostream& out) const;
  /// Every run satisfies empirical <= eps_wait_judge <= eps_split.
  bool ordering_holds() const;
  bool all_verified() const;
};

/// One seed of the table experiment: instance, solve, verified support
/// inspection, both bounds, and the cost-violation rate on fresh draws.
SeedOutcome run_certificate_seed(const ExperimentConfig& config, std::uint64_t seed);

/// Runs every seed and groups the outcomes by d*. Seeds that throw are logged
/// to stderr and skipped; throws std::runtime_error if more than 20% fail.
CertificateTable run_certificate_table(const ExperimentConfig& config);

struct ScalingRow {
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::size_t runs = 0;
  double mean_d_star = 0.0;
  std::size_t max_d_star = 0;
  std::size_t bound = 0;  // (n+1)N
  bool within_bound = true;
  bool d_star_le_n = true;  // soft
};

struct ScalingSweep {
  std::vector<ScalingRow> rows;
  std::vector<std::uint64_t> failed_seeds;

  void write_csv(std::ostream& out) const;
  bool within_bound() const;
};

/// Support-inspection d* over dim_list x samples_list x seeds.
ScalingSweep run_dstar_scaling(const ExperimentConfig& config);

struct TraceRow {
  OuterRecord record;
  std::vector<double> agent_costs;  // J_i at the centre
  double coordinator = 0.0;         // ghat at the centre
};

struct ConvergenceTrace {
  std::vector<TraceRow> rows;
  double final_vi_residual = 0.0;
  double gamma_out = 0.0;

  void write_csv(std::ostream& out) const;
  bool terminated() const;  // last residual <= gamma_out
};

/// Solver trace on the instance of config.seeds.front().
ConvergenceTrace run_convergence_trace(const ExperimentConfig& config);

/// The instance drawn for `seed` under `config`.
EvInstance experiment_instance(const ExperimentConfig& config, std::size_t dim, std::size_t samples,
                               std::uint64_t seed);

}  // namespace scenash

#endif  // SCENASH_EXPERIMENTS_HPP_
