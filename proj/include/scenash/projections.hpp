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

#ifndef SCENASH_PROJECTIONS_HPP_
#define SCENASH_PROJECTIONS_HPP_

#include <cstddef>
#include <span>

#include "scenash/types.hpp"

namespace scenash {

/// Tolerance used to report which constraints bind at a projected point.
inline constexpr double kActiveTolerance = 1e-10;

struct ProjectionResult {
  Vec point;
  std::size_t at_lower = 0;  // coordinates at 0
  std::size_t at_upper = 0;  // coordinates at the cap
  bool budget_active = false;
};

/**
 * Euclidean projection onto the probability simplex.
 *
 * Sort-based threshold method: with u sorted decreasingly, the support size
 * rho is the largest k such that u_k > (sum_{j<=k} u_j - 1) / k, and the
 * result is max(v - theta, 0) for theta at k = rho. Points already in the
 * simplex (to rounding) are returned unchanged, which makes the map exactly
 * idempotent.
 */
SimplexWeights project_simplex(std::span<const double> v);

/**
 * Euclidean projection onto { x : 1'x >= E, 0 <= x <= P }.
 *
 * If the clipped point already meets the demand it is the answer. Otherwise the
 * budget binds and x(lambda) = clamp(v + lambda 1, 0, P) for the multiplier
 * lambda >= 0; lambda is bracketed in [0, E + |v|_inf + P] and bisected until
 * |1'x(lambda) - E| <= 1e-10 max(1, E), then refined in closed form on the
 * identified free coordinates. The returned point satisfies 1'x >= E when
 * summed in floating point.
 */
Vec project_box_budget(std::span<const double> v, const FeasibleSet& set);
ProjectionResult project_box_budget_detailed(std::span<const double> v, const FeasibleSet& set);

}  // namespace scenash

#endif  // SCENASH_PROJECTIONS_HPP_
