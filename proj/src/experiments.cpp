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

#include "scenash/experiments.hpp"

#include <algorithm>
#include <exception>
#include <iostream>
#include <map>
#include <stdexcept>

#include "scenash/certificates.hpp"
#include "scenash/compression.hpp"
#include "scenash/validation.hpp"

namespace scenash {
namespace {

constexpr std::uint64_t kFreshDrawStream = 3;

void check_failures(std::size_t failed, std::size_t total, const char* who) {
  if (5 * failed > total)
    throw std::runtime_error(std::string(who) + ": more than 20% of the seeds failed");
}

class PrecisionGuard {
 public:
  PrecisionGuard(std::ostream& out, int digits) : out_(out), old_(out.precision(digits)) {}
  ~PrecisionGuard() { out_.precision(old_); }

 private:
  std::ostream& out_;
  std::streamsize old_;
};

}  // namespace

void ExperimentConfig::validate() const {
  if (agents == 0 || dim == 0 || samples == 0)
    throw std::invalid_argument("experiment config: N, n and M must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("experiment config: need 0 < beta < 1");
  if (seeds.empty()) throw std::invalid_argument("experiment config: no seeds");
  if (fresh_draws == 0) throw std::invalid_argument("experiment config: fresh_draws must be positive");
  for (std::size_t v : dim_list)
    if (v == 0) throw std::invalid_argument("experiment config: zero entry in the n list");
  for (std::size_t v : samples_list)
    if (v == 0) throw std::invalid_argument("experiment config: zero entry in the M list");
  solver.validate();
  scenario_params.validate();
}

EvInstance experiment_instance(const ExperimentConfig& config, std::size_t dim, std::size_t samples,
                               std::uint64_t seed) {
  return make_ev_instance(config.agents, dim, samples, config.scenario_params, config.agent_params,
                          seed);
}

SeedOutcome run_certificate_seed(const ExperimentConfig& config, std::uint64_t seed) {
  const EvInstance instance = experiment_instance(config, config.dim, config.samples, seed);
  const EvChargingGame game(instance.params);
  const SolveResult solution = solve_ne(game, instance.scenarios, config.solver);
  const double delta = equality_tolerance(config.solver, config.agents, config.dim);
  const CompressionReport support =
      support_compression(game, instance.scenarios, solution, config.solver, delta);

  const EvScenarioSampler sampler(config.dim, config.scenario_params);
  const ViolationEstimate estimate =
      empirical_violation_cost(game, solution.x_star, solution.gamma_star, sampler,
                               config.fresh_draws, derive_seed(seed, kFreshDrawStream));

  SeedOutcome out;
  out.seed = seed;
  out.d_star = support.cardinality();
  out.verified = support.verification == Verification::kVerified;
  out.gamma_star = solution.gamma_star;
  out.outer_iterations = solution.trace.records.size();
  out.violations = estimate.violations;
  out.trials = estimate.trials;
  out.empirical_rate = estimate.rate;
  out.eps_split = eps_split(config.samples, config.beta, out.d_star);
  out.eps_wait_judge = eps_wait_judge(config.samples, config.beta, out.d_star);
  return out;
}

CertificateTable run_certificate_table(const ExperimentConfig& config) {
  config.validate();
  CertificateTable table;
  for (std::uint64_t seed : config.seeds) {
    try {
      table.runs.push_back(run_certificate_seed(config, seed));
    } catch (const std::exception& e) {
      std::cerr << "certificate table: seed " << seed << " failed: " << e.what() << '\n';
      table.failed_seeds.push_back(seed);
    }
  }
  check_failures(table.failed_seeds.size(), config.seeds.size(), "run_certificate_table");

  std::map<std::size_t, TableRow> groups;
  for (const auto& run : table.runs) {
    TableRow& row = groups[run.d_star];
    row.d_star = run.d_star;
    ++row.runs;
    row.empirical_pct += 100.0 * run.empirical_rate;
    row.eps_split_pct = 100.0 * run.eps_split;
    row.eps_wait_judge_pct = 100.0 * run.eps_wait_judge;
  }
  for (auto& [d, row] : groups) {
    row.empirical_pct /= static_cast<double>(row.runs);
    table.rows.push_back(row);
  }
  return table;
}

void CertificateTable::write_csv(std::ostream& out) const {
  PrecisionGuard guard(out, 10);
  out << "d_star,runs,empirical_pct,eps_split_pct,eps_wait_judge_pct\n";
  for (const auto& r : rows)
    out << r.d_star << ',' << r.runs << ',' << r.empirical_pct << ',' << r.eps_split_pct << ','
        << r.eps_wait_judge_pct << '\n';
}

void CertificateTable::write_runs_csv(std::ostream& out) const {
  PrecisionGuard guard(out, 10);
  out << "seed,d_star,verified,gamma_star,outer_iterations,violations,trials,empirical_pct,"
         "eps_split_pct,eps_wait_judge_pct\n";
  for (const auto& r : runs)
    out << r.seed << ',' << r.d_star << ',' << (r.verified ? 1 : 0) << ',' << r.gamma_star << ','
        << r.outer_iterations << ',' << r.violations << ',' << r.trials << ','
        << 100.0 * r.empirical_rate << ',' << 100.0 * r.eps_split << ','
        << 100.0 * r.eps_wait_judge << '\n';
}

bool CertificateTable::ordering_holds() const {
  return std::all_of(runs.begin(), runs.end(), [](const SeedOutcome& r) {
    return r.empirical_rate <= r.eps_wait_judge && r.eps_wait_judge <= r.eps_split;
  });
}

bool CertificateTable::all_verified() const {
  return std::all_of(runs.begin(), runs.end(), [](const SeedOutcome& r) { return r.verified; });
}

ScalingSweep run_dstar_scaling(const ExperimentConfig& config) {
  config.validate();
  if (config.dim_list.empty() || config.samples_list.empty())
    throw std::invalid_argument("run_dstar_scaling: n and M lists must be nonempty");
  ScalingSweep sweep;
  std::size_t attempted = 0;
  for (std::size_t dim : config.dim_list) {
    for (std::size_t samples : config.samples_list) {
      ScalingRow row;
      row.dim = dim;
      row.samples = samples;
      row.bound = (dim + 1) * config.agents;
      std::size_t total = 0;
      for (std::uint64_t seed : config.seeds) {
        ++attempted;
        try {
          const EvInstance instance = experiment_instance(config, dim, samples, seed);
          const EvChargingGame game(instance.params);
          const SolveResult solution = solve_ne(game, instance.scenarios, config.solver);
          const std::size_t d_star = support_from_weights(solution.y_star).size();
          ++row.runs;
          total += d_star;
          row.max_d_star = std::max(row.max_d_star, d_star);
          if (d_star > row.bound) row.within_bound = false;
          if (d_star > dim) row.d_star_le_n = false;
        } catch (const std::exception& e) {
          std::cerr << "d* scaling: n=" << dim << " M=" << samples << " seed " << seed
                    << " failed: " << e.what() << '\n';
          sweep.failed_seeds.push_back(seed);
        }
      }
      row.mean_d_star = row.runs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(row.runs);
      sweep.rows.push_back(row);
    }
  }
  check_failures(sweep.failed_seeds.size(), attempted, "run_dstar_scaling");
  return sweep;
}

void ScalingSweep::write_csv(std::ostream& out) const {
  PrecisionGuard guard(out, 10);
  out << "n,M,runs,mean_d_star,max_d_star,bound,within_bound,d_star_le_n\n";
  for (const auto& r : rows)
    out << r.dim << ',' << r.samples << ',' << r.runs << ',' << r.mean_d_star << ','
        << r.max_d_star << ',' << r.bound << ',' << (r.within_bound ? 1 : 0) << ','
        << (r.d_star_le_n ? 1 : 0) << '\n';
}

bool ScalingSweep::within_bound() const {
  return std::all_of(rows.begin(), rows.end(), [](const ScalingRow& r) { return r.within_bound; });
}

ConvergenceTrace run_convergence_trace(const ExperimentConfig& config) {
  config.validate();
  const EvInstance instance =
      experiment_instance(config, config.dim, config.samples, config.seeds.front());
  const EvChargingGame game(instance.params);
  ConvergenceTrace trace;
  trace.gamma_out = config.solver.gamma_out;
  const SolveResult solution = solve_ne(
      game, instance.scenarios, config.solver, [&](const OuterRecord& rec, const AugmentedPoint& z) {
        TraceRow row{rec, {}, eval_ghat(game, z.x, z.y, instance.scenarios)};
        for (std::size_t i = 0; i < game.num_agents(); ++i)
          row.agent_costs.push_back(eval_agent_cost(game, i, z.x, instance.scenarios));
        trace.rows.push_back(std::move(row));
      });
  trace.final_vi_residual = solution.trace.final_vi_residual;
  return trace;
}

void ConvergenceTrace::write_csv(std::ostream& out) const {
  PrecisionGuard guard(out, 17);
  out << "k,residual,inner_iters,eta";
  const std::size_t agents = rows.empty() ? 0 : rows.front().agent_costs.size();
  for (std::size_t i = 1; i <= agents; ++i) out << ",J_" << i;
  out << ",coordinator\n";
  for (const auto& r : rows) {
    out << r.record.k << ',' << r.record.residual << ',' << r.record.inner_iterations << ','
        << r.record.eta;
    for (double j : r.agent_costs) out << ',' << j;
    out << ',' << r.coordinator << '\n';
  }
}

bool ConvergenceTrace::terminated() const {
  return !rows.empty() && rows.back().record.residual <= gamma_out;
}

}  // namespace scenash
