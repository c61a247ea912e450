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

// The scenario game: N agents minimise f_i(x) + max_m g(x, theta_m) over
// their own sets X_i. The max over scenarios is replaced by a coordinator
// choosing simplex weights y, so that agent i sees the smooth cost
// f_i(x) + ghat(x, y) with ghat(x, y) = sum_m y_m g(x, theta_m).

#ifndef SCENASH_GAME_HPP_
#define SCENASH_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>

#include "scenash/types.hpp"

namespace scenash {

using Rng = std::mt19937_64;

/// The smooth part f_i + ghat of one agent's augmented cost, as a function of
/// that agent's block with x_{-i} and y frozen.
class AgentObjective {
 public:
  virtual ~AgentObjective() = default;

  virtual double value(std::span<const double> own) const = 0;
  virtual void gradient(std::span<const double> own, std::span<double> out) const = 0;
  /// Upper bound on the spectral norm of the Hessian in `own`.
  virtual double lipschitz() const = 0;
  /// Lower bound on the Hessian eigenvalues in `own`; 0 when unknown.
  virtual double strong_convexity() const { return 0.0; }
};

/// Monotonicity constants of the pseudo-gradients of f and g.
struct MonotonicityConstants {
  double chi_f = 0.0;
  double chi_g = 0.0;
};

/// Starting profile for the proximal scheme.
enum class InitialRule {
  kBudgetUniform,  // x_i = (E_i / n) 1, clipped to the box
  kMaxPower,       // x_i = P_i 1
  kRandom,         // random feasible point
};

class Game {
 public:
  virtual ~Game() = default;

  virtual std::size_t num_agents() const = 0;
  virtual std::size_t agent_dim() const = 0;

  /// f_i(x).
  virtual double local_cost(std::size_t i, const StrategyProfile& x) const = 0;
  /// grad_{x_i} f_i(x).
  virtual Vec local_cost_gradient(std::size_t i, const StrategyProfile& x) const = 0;
  /// g(x, theta).
  virtual double uncertain_cost(const StrategyProfile& x, const Scenario& theta) const = 0;
  /// grad_{x_i} g(x, theta).
  virtual Vec uncertain_cost_gradient(std::size_t i, const StrategyProfile& x,
                                      const Scenario& theta) const = 0;

  /// Euclidean projection onto X_i.
  virtual Vec project(std::size_t i, std::span<const double> v) const = 0;
  virtual bool feasible(std::size_t i, std::span<const double> v, double tol) const = 0;
  virtual Vec random_feasible(std::size_t i, Rng& rng) const = 0;
  virtual StrategyProfile initial_profile(InitialRule rule, std::uint64_t seed = 0) const = 0;

  virtual std::unique_ptr<AgentObjective> agent_objective(std::size_t i,
                                                          const StrategyProfile& x,
                                                          const ScenarioSet& scenarios,
                                                          const SimplexWeights& y) const = 0;

  virtual std::optional<MonotonicityConstants> monotonicity_constants() const {
    return std::nullopt;
  }

  /// Throws DimensionError unless x matches (N, n).
  void check_profile(const StrategyProfile& x) const;
  bool profile_feasible(const StrategyProfile& x, double tol) const;
};

/// J_i(x) = f_i(x) + max_m g(x, theta_m).
double eval_agent_cost(const Game& game, std::size_t i, const StrategyProfile& x,
                       const ScenarioSet& scenarios);

/// max_m g(x, theta_m).
double worst_case_cost(const Game& game, const StrategyProfile& x, const ScenarioSet& scenarios);

/// g(x, theta_m) for every m.
Vec scenario_costs(const Game& game, const StrategyProfile& x, const ScenarioSet& scenarios);

/// ghat(x, y) = sum_m y_m g(x, theta_m).
double eval_ghat(const Game& game, const StrategyProfile& x, const SimplexWeights& y,
                 const ScenarioSet& scenarios);

/// The operator F(z) of the equilibrium VI. The first nN entries stack
/// grad_{x_i} (f_i + ghat); the last M entries are -g(x, theta_m).
Vec pseudo_gradient(const Game& game, const AugmentedPoint& z, const ScenarioSet& scenarios);

/// Euclidean projection of a stacked (x, y) vector onto X x Delta.
Vec project_augmented(const Game& game, std::span<const double> z, std::size_t scenario_count);

}  // namespace scenash

#endif  // SCENASH_GAME_HPP_
