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

#include "scenash/subproblems.hpp"

#include <cmath>
#include <stdexcept>

#include "scenash/errors.hpp"
#include "scenash/projections.hpp"

namespace scenash {
namespace {

void regularised_gradient(const AgentObjective& objective, std::span<const double> centre,
                          std::span<const double> own, double eta, double tau, Vec& out) {
  objective.gradient(own, out);
  for (std::size_t j = 0; j < own.size(); ++j) out[j] += eta * own[j] + tau * (own[j] - centre[j]);
}

}  // namespace

double agent_subproblem_residual(const Game& game, std::size_t i, const AgentObjective& objective,
                                 std::span<const double> centre, std::span<const double> own,
                                 double eta, double tau) {
  const double lipschitz = objective.lipschitz() + eta + tau;
  Vec grad(own.size());
  regularised_gradient(objective, centre, own, eta, tau, grad);
  Vec trial(own.size());
  for (std::size_t j = 0; j < own.size(); ++j) trial[j] = own[j] - grad[j] / lipschitz;
  const Vec projected = game.project(i, trial);
  return lipschitz * distance(own, projected);
}

Vec solve_agent_subproblem(const Game& game, std::size_t i, std::span<const double> centre,
                           const StrategyProfile& x, const SimplexWeights& y,
                           const ScenarioSet& scenarios, double eta, double tau,
                           const SubproblemOptions& options) {
  if (!(tau > 0.0)) throw std::invalid_argument("agent subproblem needs tau > 0");
  if (!(eta >= 0.0)) throw std::invalid_argument("agent subproblem needs eta >= 0");
  game.check_profile(x);
  const std::size_t n = game.agent_dim();
  if (centre.size() != n) throw DimensionError("agent subproblem: centre has wrong length");

  const auto objective = game.agent_objective(i, x, scenarios, y);
  const double lipschitz = objective->lipschitz() + eta + tau;
  const double strong = objective->strong_convexity() + eta + tau;
  const double momentum = (std::sqrt(lipschitz) - std::sqrt(strong)) / (std::sqrt(lipschitz) + std::sqrt(strong));

  Vec current(x.block(i).begin(), x.block(i).end());
  Vec previous = current;
  Vec grad(n), trial(n), extrapolated(n);

  // Residual at `point`; leaves the projected gradient step in `trial`.
  auto residual_at = [&](const Vec& point) {
    regularised_gradient(*objective, centre, point, eta, tau, grad);
    for (std::size_t j = 0; j < n; ++j) trial[j] = point[j] - grad[j] / lipschitz;
    const Vec projected = game.project(i, trial);
    return lipschitz * distance(point, projected);
  };

  double residual = residual_at(current);
  if (residual <= options.tolerance) return current;

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    for (std::size_t j = 0; j < n; ++j)
      extrapolated[j] = current[j] + momentum * (current[j] - previous[j]);
    regularised_gradient(*objective, centre, extrapolated, eta, tau, grad);
    for (std::size_t j = 0; j < n; ++j) trial[j] = extrapolated[j] - grad[j] / lipschitz;
    previous = std::move(current);
    current = game.project(i, trial);
    residual = residual_at(current);
    if (residual <= options.tolerance) return current;
  }
  throw ConvergenceError("agent subproblem hit the iteration cap", residual);
}

SimplexWeights solve_coordinator_subproblem(std::span<const double> costs,
                                            const SimplexWeights& centre, double eta, double tau) {
  if (!(eta + tau > 0.0)) throw std::invalid_argument("coordinator subproblem needs eta + tau > 0");
  if (costs.size() != centre.size()) throw DimensionError("coordinator subproblem: length mismatch");
  Vec target(costs.size());
  for (std::size_t m = 0; m < costs.size(); ++m) target[m] = (costs[m] + tau * centre[m]) / (eta + tau);
  return project_simplex(target);
}

SimplexWeights solve_coordinator_subproblem(const Game& game, const StrategyProfile& x,
                                            const SimplexWeights& centre,
                                            const ScenarioSet& scenarios, double eta, double tau) {
  if (centre.size() != scenarios.size()) throw DimensionError("coordinator subproblem: length(ybar) != M");
  const Vec costs = scenario_costs(game, x, scenarios);
  return solve_coordinator_subproblem(costs, centre, eta, tau);
}

}  // namespace scenash
