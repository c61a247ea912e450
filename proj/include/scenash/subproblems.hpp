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

// Best responses in the regularised augmented game. Agent i minimises
//
//   f_i(v, x_{-i}) + ghat(v, x_{-i}, y) + eta/2 |(v, x_{-i}, y)|^2 + tau/2 |v - xbar_i|^2
//
// over X_i, and the coordinator maximises
//
//   ghat(x, w) - eta/2 |(x, w)|^2 - tau/2 |w - ybar|^2
//
// over the simplex.

#ifndef SCENASH_SUBPROBLEMS_HPP_
#define SCENASH_SUBPROBLEMS_HPP_

#include <cstddef>
#include <span>

#include "scenash/game.hpp"
#include "scenash/types.hpp"

namespace scenash {

struct SubproblemOptions {
  double tolerance = 1e-12;  // on the projected-gradient residual
  std::size_t max_iterations = 100000;
};

/// Projected-gradient residual L |v - P(v - grad / L)| of the regularised
/// agent objective at `own`. Zero exactly at the minimiser.
double agent_subproblem_residual(const Game& game, std::size_t i, const AgentObjective& objective,
                                 std::span<const double> centre, std::span<const double> own,
                                 double eta, double tau);

/**
 * Agent i's regularised best response.
 *
 * Accelerated projected gradient with constant step 1/L and constant
 * momentum (sqrt(L) - sqrt(mu)) / (sqrt(L) + sqrt(mu)), where
 * L = lipschitz + eta + tau and mu = strong_convexity + eta + tau. The
 * iteration starts from x's own block i (which must be feasible) and stops
 * once the projected-gradient residual is at most `options.tolerance`; a
 * start point that already meets the tolerance is returned unchanged.
 *
 * `x` supplies x_{-i}; `centre` is xbar_i. Throws ConvergenceError on the
 * iteration cap.
 */
Vec solve_agent_subproblem(const Game& game, std::size_t i, std::span<const double> centre,
                           const StrategyProfile& x, const SimplexWeights& y,
                           const ScenarioSet& scenarios, double eta, double tau,
                           const SubproblemOptions& options = {});

/// Closed form: ghat is linear in the weights, so the maximiser is
/// project_simplex((c + tau ybar) / (eta + tau)) with c_m = g(x, theta_m).
SimplexWeights solve_coordinator_subproblem(const Game& game, const StrategyProfile& x,
                                            const SimplexWeights& centre,
                                            const ScenarioSet& scenarios, double eta, double tau);

/// Same, from precomputed scenario costs c.
SimplexWeights solve_coordinator_subproblem(std::span<const double> costs,
                                            const SimplexWeights& centre, double eta, double tau);

}  // namespace scenash

#endif  // SCENASH_SUBPROBLEMS_HPP_
