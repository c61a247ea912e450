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

#include "scenash/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "scenash/errors.hpp"
#include "scenash/projections.hpp"
#include "scenash/probes.hpp"

namespace scenash {
namespace {

// Agents not listed as active keep their centre strategy.
InnerResult run_inner(const Game& game, const ScenarioSet& scenarios, const AugmentedPoint& centre,
                      double eta, const SolverConfig& config, const std::vector<bool>& active) {
  AugmentedPoint z = centre;
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t l = 1; l <= config.max_inner; ++l) {
    StrategyProfile next_x = z.x;
    for (std::size_t i = 0; i < game.num_agents(); ++i) {
      if (!active[i]) continue;
      const Vec xi = solve_agent_subproblem(game, i, centre.x.block(i), z.x, z.y, scenarios, eta,
                                            config.tau, config.subproblem);
      std::copy(xi.begin(), xi.end(), next_x.block(i).begin());
    }
    SimplexWeights next_y =
        solve_coordinator_subproblem(game, z.x, centre.y, scenarios, eta, config.tau);
    AugmentedPoint next{std::move(next_x), std::move(next_y)};
    change = distance(next, z);
    z = std::move(next);
    if (change <= config.gamma_inn) return {std::move(z), l, change};
  }
  throw ConvergenceError("inner loop hit the iteration cap", change);
}

SolveResult run_proximal(const Game& game, const ScenarioSet& scenarios, const SolverConfig& config,
                         const AugmentedPoint& start, const std::vector<bool>& active,
                         const OuterObserver& observer) {
  config.validate();
  game.check_profile(start.x);
  if (start.y.size() != scenarios.size()) throw DimensionError("solver: length(y0) != M");
  if (scenarios.dim() != game.agent_dim()) throw DimensionError("solver: scenario dimension != n");

  AugmentedPoint centre = start;
  SolveTrace trace;
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < config.max_outer; ++k) {
    const double eta = config.eta(k);
    InnerResult inner = run_inner(game, scenarios, centre, eta, config, active);
    change = distance(inner.z, centre);
    centre = std::move(inner.z);
    trace.records.push_back({k, change, inner.iterations, eta});
    if (observer) observer(trace.records.back(), centre);
    if (change <= config.gamma_out) {
      const double gamma = worst_case_cost(game, centre.x, scenarios);
      trace.final_vi_residual = vi_residual(game, scenarios, centre);
      return {std::move(centre.x), std::move(centre.y), gamma, std::move(trace)};
    }
  }
  throw ConvergenceError("outer loop hit the iteration cap", change);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("solver config: tau must be positive");
  if (!(eta0 > 0.0)) throw std::invalid_argument("solver config: eta0 must be positive");
  if (!(gamma_inn > 0.0) || !(gamma_inn < gamma_out))
    throw std::invalid_argument("solver config: need 0 < gamma_inn < gamma_out");
  if (max_inner == 0 || max_outer == 0)
    throw std::invalid_argument("solver config: iteration caps must be positive");
}

void SolveTrace::write_csv(std::ostream& out) const {
  out << "k,residual,inner_iters,eta\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : records)
    out << r.k << ',' << r.residual << ',' << r.inner_iterations << ',' << r.eta << '\n';
  out.precision(old_precision);
}

InnerResult inner_loop(const Game& game, const ScenarioSet& scenarios, const AugmentedPoint& centre,
                       double eta, const SolverConfig& config) {
  config.validate();
  game.check_profile(centre.x);
  if (centre.y.size() != scenarios.size()) throw DimensionError("inner_loop: length(ybar) != M");
  return run_inner(game, scenarios, centre, eta, config, std::vector<bool>(game.num_agents(), true));
}

SolveResult solve_ne_from(const Game& game, const ScenarioSet& scenarios, const SolverConfig& config,
                          const AugmentedPoint& start, const OuterObserver& observer) {
  return run_proximal(game, scenarios, config, start, std::vector<bool>(game.num_agents(), true),
                      observer);
}

SolveResult solve_ne(const Game& game, const ScenarioSet& scenarios, const SolverConfig& config,
                     const OuterObserver& observer) {
  AugmentedPoint start{game.initial_profile(config.initial_rule, config.initial_seed),
                       SimplexWeights::uniform(scenarios.size())};
  return solve_ne_from(game, scenarios, config, start, observer);
}

double vi_residual(const Game& game, const ScenarioSet& scenarios, const AugmentedPoint& z) {
  const Vec stacked = z.stacked();
  const Vec f = pseudo_gradient(game, z, scenarios);
  Vec step(stacked.size());
  for (std::size_t k = 0; k < stacked.size(); ++k) step[k] = stacked[k] - f[k];
  const Vec projected = project_augmented(game, step, scenarios.size());
  return distance(stacked, projected);
}

double best_response_gap(const Game& game, const ScenarioSet& scenarios,
                         const StrategyProfile& x_star, std::size_t i, const SolverConfig& config) {
  game.check_profile(x_star);
  if (i >= game.num_agents()) throw DimensionError("best_response_gap: agent index out of range");
  std::vector<bool> active(game.num_agents(), false);
  active[i] = true;
  const AugmentedPoint start{x_star, SimplexWeights::uniform(scenarios.size())};
  const SolveResult best = run_proximal(game, scenarios, config, start, active, {});
  const double at_star = eval_agent_cost(game, i, x_star, scenarios);
  const double at_best = eval_agent_cost(game, i, best.x_star, scenarios);
  return std::max(0.0, at_star - at_best);
}

double regularized_monotonicity_modulus(const Game& game, const ScenarioSet& scenarios, double tau,
                                        double eta, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("regularized_monotonicity_modulus: trials >= 1");
  Rng rng(seed);
  const AugmentedPoint centre = random_augmented_point(game, scenarios.size(), rng);
  const Vec zbar = centre.stacked();
  auto regularised = [&](const AugmentedPoint& z) {
    Vec f = pseudo_gradient(game, z, scenarios);
    const Vec s = z.stacked();
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += eta * s[k] + tau * (s[k] - zbar[k]);
    return f;
  };
  double modulus = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const AugmentedPoint u = random_augmented_point(game, scenarios.size(), rng);
    const AugmentedPoint v = random_augmented_point(game, scenarios.size(), rng);
    const Vec su = u.stacked(), sv = v.stacked();
    const Vec fu = regularised(u), fv = regularised(v);
    double inner = 0.0, sq = 0.0;
    for (std::size_t k = 0; k < su.size(); ++k) {
      inner += (su[k] - sv[k]) * (fu[k] - fv[k]);
      sq += (su[k] - sv[k]) * (su[k] - sv[k]);
    }
    if (sq > 0.0) modulus = std::min(modulus, inner / sq);
  }
  return modulus;
}

}  // namespace scenash
