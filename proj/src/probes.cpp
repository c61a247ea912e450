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

#include "scenash/probes.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace scenash {

AugmentedPoint random_augmented_point(const Game& game, std::size_t scenario_count, Rng& rng) {
  StrategyProfile x(game.num_agents(), game.agent_dim());
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    const Vec xi = game.random_feasible(i, rng);
    std::copy(xi.begin(), xi.end(), x.block(i).begin());
  }
  // Normalised exponentials are uniform on the simplex.
  std::exponential_distribution<double> exp1(1.0);
  Vec w(scenario_count);
  double total = 0.0;
  for (auto& v : w) total += (v = exp1(rng));
  for (auto& v : w) v /= total;
  return {std::move(x), SimplexWeights(std::move(w))};
}

MonotonicityReport monotonicity_probe(const Game& game, const ScenarioSet& scenarios,
                                      std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("monotonicity_probe: trials >= 1");
  Rng rng(seed);
  MonotonicityReport report{std::numeric_limits<double>::infinity(), true};
  for (std::size_t t = 0; t < trials; ++t) {
    const AugmentedPoint u = random_augmented_point(game, scenarios.size(), rng);
    const AugmentedPoint v = random_augmented_point(game, scenarios.size(), rng);
    const Vec su = u.stacked(), sv = v.stacked();
    const Vec fu = pseudo_gradient(game, u, scenarios), fv = pseudo_gradient(game, v, scenarios);
    double inner = 0.0, sq = 0.0;
    for (std::size_t k = 0; k < su.size(); ++k) {
      inner += (su[k] - sv[k]) * (fu[k] - fv[k]);
      sq += (su[k] - sv[k]) * (su[k] - sv[k]);
    }
    report.min_inner_product = std::min(report.min_inner_product, inner);
    if (inner < -1e-8 * (1.0 + sq)) report.pass = false;
  }
  return report;
}

}  // namespace scenash
