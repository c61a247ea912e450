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

// Electric-vehicle charging game. Each of N vehicles chooses a charging
// profile x_i over n hourly slots and pays
//
//   x_i' (A0 sigma + b0) + (1/N) max_m sigma' (A_m sigma + b_m),
//
// with sigma = sum_i x_i and all A matrices diagonal. The price slopes A_m
// and offsets b_m are the uncertain scenarios.

#ifndef SCENASH_EV_GAME_HPP_
#define SCENASH_EV_GAME_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scenash/game.hpp"
#include "scenash/types.hpp"

namespace scenash {

/// Source of fresh uncertainty realisations.
class ScenarioSampler {
 public:
  virtual ~ScenarioSampler() = default;
  virtual Scenario draw(Rng& rng) const = 0;
};

struct EvGameParams {
  Vec a0;                           // nominal price slope per slot, > 0
  Vec b0;                           // nominal price offset per slot
  std::vector<FeasibleSet> agents;  // (E_i, P_i) per vehicle
};

/// Synthetic winter-weekday price slope, one value per hour from midnight.
/// Double-peaked (morning and evening), values in [0.03, 0.12].
const std::array<double, 24>& nominal_price_profile();
/// The nominal profile laid over n hourly slots, wrapping after 24.
Vec nominal_price_slope(std::size_t n);

class EvChargingGame final : public Game {
 public:
  explicit EvChargingGame(EvGameParams params);

  std::size_t num_agents() const override { return params_.agents.size(); }
  std::size_t agent_dim() const override { return params_.a0.size(); }
  const EvGameParams& params() const noexcept { return params_; }

  double local_cost(std::size_t i, const StrategyProfile& x) const override;
  Vec local_cost_gradient(std::size_t i, const StrategyProfile& x) const override;
  double uncertain_cost(const StrategyProfile& x, const Scenario& theta) const override;
  Vec uncertain_cost_gradient(std::size_t i, const StrategyProfile& x,
                              const Scenario& theta) const override;

  Vec project(std::size_t i, std::span<const double> v) const override;
  bool feasible(std::size_t i, std::span<const double> v, double tol) const override;
  Vec random_feasible(std::size_t i, Rng& rng) const override;
  StrategyProfile initial_profile(InitialRule rule, std::uint64_t seed = 0) const override;

  std::unique_ptr<AgentObjective> agent_objective(std::size_t i, const StrategyProfile& x,
                                                  const ScenarioSet& scenarios,
                                                  const SimplexWeights& y) const override;

  /// chi_f = min(a0) and chi_g = 0, valid whenever every scenario slope is
  /// positive.
  std::optional<MonotonicityConstants> monotonicity_constants() const override;

  /// g evaluated directly on an aggregate profile sigma.
  double uncertain_cost_of_aggregate(std::span<const double> sigma, const Scenario& theta) const;

 private:
  EvGameParams params_;
};

/// Lognormal slopes and uniform offsets. Defaults give prices of the same
/// order as the nominal profile.
struct EvScenarioParams {
  double log_mean = std::log(0.05);  // mu
  double log_sd = 0.5;               // s
  double offset_lo = 0.0;
  double offset_hi = 0.5;

  void validate() const;
};

class EvScenarioSampler final : public ScenarioSampler {
 public:
  EvScenarioSampler(std::size_t n, EvScenarioParams params);
  Scenario draw(Rng& rng) const override;
  std::size_t dim() const noexcept { return n_; }

 private:
  std::size_t n_;
  EvScenarioParams params_;
};

/// M i.i.d. scenarios; deterministic in `seed`.
ScenarioSet ev_sample_scenarios(std::size_t n, std::size_t m, const EvScenarioParams& params,
                                std::uint64_t seed);

struct EvAgentParams {
  double power_lo = 6.0;   // kW
  double power_hi = 15.0;  // kW
  double kwh_per_12h = 35.0;
};

/// P_i ~ U[power_lo, power_hi], E_i ~ U[0, min(n P_i, 35 n / 12)].
std::vector<FeasibleSet> ev_sample_agents(std::size_t agents, std::size_t n,
                                          const EvAgentParams& params, std::uint64_t seed);

/// A self-contained charging instance: game parameters plus training scenarios.
struct EvInstance {
  EvGameParams params;
  ScenarioSet scenarios;

  /// Checks dimensions, a0 > 0, every feasible set, and positive slopes.
  void validate() const;
};

/// Draws agents and scenarios from independent streams derived from `seed`.
/// b0 is zero and a0 the nominal profile.
EvInstance make_ev_instance(std::size_t agents, std::size_t n, std::size_t m,
                            const EvScenarioParams& scenario_params,
                            const EvAgentParams& agent_params, std::uint64_t seed);

/// splitmix64 mix of (seed, stream), used to derive independent sub-streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace scenash

#endif  // SCENASH_EV_GAME_HPP_
