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

#include "scenash/game.hpp"

#include <algorithm>
#include <limits>

#include "scenash/errors.hpp"
#include "scenash/projections.hpp"

namespace scenash {

void Game::check_profile(const StrategyProfile& x) const {
  if (x.agents() != num_agents() || x.dim() != agent_dim())
    throw DimensionError("strategy profile does not match the game's (N, n)");
}

bool Game::profile_feasible(const StrategyProfile& x, double tol) const {
  check_profile(x);
  for (std::size_t i = 0; i < num_agents(); ++i)
    if (!feasible(i, x.block(i), tol)) return false;
  return true;
}

Vec scenario_costs(const Game& game, const StrategyProfile& x, const ScenarioSet& scenarios) {
  game.check_profile(x);
  Vec c;
  c.reserve(scenarios.size());
  for (const auto& theta : scenarios) c.push_back(game.uncertain_cost(x, theta));
  return c;
}

double worst_case_cost(const Game& game, const StrategyProfile& x, const ScenarioSet& scenarios) {
  const Vec c = scenario_costs(game, x, scenarios);
  return *std::max_element(c.begin(), c.end());
}

double eval_agent_cost(const Game& game, std::size_t i, const StrategyProfile& x,
                       const ScenarioSet& scenarios) {
  game.check_profile(x);
  if (i >= game.num_agents()) throw DimensionError("agent index out of range");
  return game.local_cost(i, x) + worst_case_cost(game, x, scenarios);
}

double eval_ghat(const Game& game, const StrategyProfile& x, const SimplexWeights& y,
                 const ScenarioSet& scenarios) {
  if (y.size() != scenarios.size()) throw DimensionError("eval_ghat: length(y) != M");
  const Vec c = scenario_costs(game, x, scenarios);
  double total = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) total += y[m] * c[m];
  return total;
}

Vec pseudo_gradient(const Game& game, const AugmentedPoint& z, const ScenarioSet& scenarios) {
  game.check_profile(z.x);
  if (z.y.size() != scenarios.size()) throw DimensionError("pseudo_gradient: length(y) != M");
  const std::size_t agents = game.num_agents();
  const std::size_t n = game.agent_dim();
  const std::size_t m_count = scenarios.size();

  Vec out(agents * n + m_count, 0.0);
  for (std::size_t i = 0; i < agents; ++i) {
    const Vec gf = game.local_cost_gradient(i, z.x);
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = gf[j];
    for (std::size_t m = 0; m < m_count; ++m) {
      if (z.y[m] == 0.0) continue;
      const Vec gg = game.uncertain_cost_gradient(i, z.x, scenarios[m]);
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += z.y[m] * gg[j];
    }
  }
  for (std::size_t m = 0; m < m_count; ++m)
    out[agents * n + m] = -game.uncertain_cost(z.x, scenarios[m]);
  return out;
}

Vec project_augmented(const Game& game, std::span<const double> z, std::size_t scenario_count) {
  const std::size_t agents = game.num_agents();
  const std::size_t n = game.agent_dim();
  if (z.size() != agents * n + scenario_count) throw DimensionError("project_augmented: size");
  Vec out(z.size());
  for (std::size_t i = 0; i < agents; ++i) {
    const Vec p = game.project(i, z.subspan(i * n, n));
    std::copy(p.begin(), p.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  const SimplexWeights y = project_simplex(z.subspan(agents * n, scenario_count));
  std::copy(y.values().begin(), y.values().end(),
            out.begin() + static_cast<std::ptrdiff_t>(agents * n));
  return out;
}

}  // namespace scenash
