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

// Randomised checks of the standing assumptions.

#ifndef SCENASH_PROBES_HPP_
#define SCENASH_PROBES_HPP_

#include <cstddef>
#include <cstdint>

#include "scenash/game.hpp"
#include "scenash/types.hpp"

namespace scenash {

/// Feasible x from Game::random_feasible and y uniform on the simplex.
AugmentedPoint random_augmented_point(const Game& game, std::size_t scenario_count, Rng& rng);

struct MonotonicityReport {
  double min_inner_product = 0.0;
  bool pass = false;
};

/// Samples feasible pairs (u, v) and checks (u-v)'(F(u)-F(v)) against
/// -1e-8 (1 + |u-v|^2).
MonotonicityReport monotonicity_probe(const Game& game, const ScenarioSet& scenarios,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace scenash

#endif  // SCENASH_PROBES_HPP_
