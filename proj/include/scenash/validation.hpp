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

// Monte Carlo estimates of how often a fresh scenario breaks an equilibrium.

#ifndef SCENASH_VALIDATION_HPP_
#define SCENASH_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "scenash/certificates.hpp"
#include "scenash/ev_game.hpp"
#include "scenash/game.hpp"
#include "scenash/solver.hpp"
#include "scenash/types.hpp"

namespace scenash {

enum class ViolationKind { kCostViolation, kNeChange };

std::string_view to_string(ViolationKind kind);

struct ViolationEstimate {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t failures = 0;  // solver failures, excluded from the rate
  double rate = 0.0;         // violations / (trials - failures)
  ViolationKind kind = ViolationKind::kCostViolation;
  std::uint64_t seed = 0;

  /// 1 / sqrt(trials - failures).
  double heuristic_width() const;
};

/// Fraction of fresh draws theta with g(x*, theta) > gamma*. Optionally
/// records every g(x*, theta) and per-draw flags in draw order.
ViolationEstimate empirical_violation_cost(const Game& game, const StrategyProfile& x_star,
                                           double gamma_star, const ScenarioSampler& sampler,
                                           std::size_t trials, std::uint64_t seed,
                                           std::vector<double>* costs = nullptr,
                                           std::vector<bool>* flags = nullptr);

/// Fraction of fresh draws whose addition to S moves the equilibrium by more
/// than `delta` in the sup norm. Every draw costs a full solve on M + 1
/// scenarios. Draws are identical to the cost estimator's for the same seed.
ViolationEstimate empirical_violation_ne(const Game& game, const ScenarioSet& scenarios,
                                         const StrategyProfile& x_star,
                                         const ScenarioSampler& sampler, std::size_t trials,
                                         const SolverConfig& config, double delta,
                                         std::uint64_t seed, std::vector<bool>* flags = nullptr);

/// rate <= epsilon.
bool certificate_conformance(const ViolationEstimate& estimate, const Certificate& cert);

/// Draws uniformly (with replacement) from a fixed scenario set.
class ReplaySampler final : public ScenarioSampler {
 public:
  explicit ReplaySampler(ScenarioSet pool) : pool_(std::move(pool)) {}
  Scenario draw(Rng& rng) const override;

 private:
  ScenarioSet pool_;
};

}  // namespace scenash

#endif  // SCENASH_VALIDATION_HPP_
