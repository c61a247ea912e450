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

#include "scenash/validation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "scenash/errors.hpp"

namespace scenash {
namespace {

void finish(ViolationEstimate& est) {
  const std::size_t counted = est.trials - est.failures;
  est.rate = counted == 0 ? 0.0 : static_cast<double>(est.violations) / static_cast<double>(counted);
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  return kind == ViolationKind::kNeChange ? "ne_change" : "cost_violation";
}

double ViolationEstimate::heuristic_width() const {
  const std::size_t counted = trials - failures;
  return counted == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(counted));
}

ViolationEstimate empirical_violation_cost(const Game& game, const StrategyProfile& x_star,
                                           double gamma_star, const ScenarioSampler& sampler,
                                           std::size_t trials, std::uint64_t seed,
                                           std::vector<double>* costs, std::vector<bool>* flags) {
  if (trials == 0) throw std::invalid_argument("empirical_violation_cost: trials >= 1");
  game.check_profile(x_star);
  Rng rng(seed);
  ViolationEstimate est{trials, 0, 0, 0.0, ViolationKind::kCostViolation, seed};
  if (costs) costs->clear();
  if (flags) flags->clear();
  for (std::size_t t = 0; t < trials; ++t) {
    const Scenario theta = sampler.draw(rng);
    const double cost = game.uncertain_cost(x_star, theta);
    const bool violated = cost > gamma_star;
    if (violated) ++est.violations;
    if (costs) costs->push_back(cost);
    if (flags) flags->push_back(violated);
  }
  finish(est);
  return est;
}

ViolationEstimate empirical_violation_ne(const Game& game, const ScenarioSet& scenarios,
                                         const StrategyProfile& x_star,
                                         const ScenarioSampler& sampler, std::size_t trials,
                                         const SolverConfig& config, double delta,
                                         std::uint64_t seed, std::vector<bool>* flags) {
  if (trials == 0) throw std::invalid_argument("empirical_violation_ne: trials >= 1");
  game.check_profile(x_star);
  Rng rng(seed);
  ViolationEstimate est{trials, 0, 0, 0.0, ViolationKind::kNeChange, seed};
  if (flags) flags->clear();
  for (std::size_t t = 0; t < trials; ++t) {
    const Scenario theta = sampler.draw(rng);
    bool changed = false;
    try {
      const SolveResult extended = solve_ne(game, scenarios.with_appended(theta), config);
      changed = max_abs_diff(extended.x_star.flat(), x_star.flat()) > delta;
    } catch (const ConvergenceError&) {
      ++est.failures;
    }
    if (changed) ++est.violations;
    if (flags) flags->push_back(changed);
  }
  finish(est);
  return est;
}

bool certificate_conformance(const ViolationEstimate& estimate, const Certificate& cert) {
  return estimate.rate <= cert.epsilon;
}

Scenario ReplaySampler::draw(Rng& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return pool_[pick(rng)];
}

}  // namespace scenash
