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

#include "scenash/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "scenash/errors.hpp"

namespace scenash {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double clamped_sum(std::span<const double> v, double shift, double cap) {
  double s = 0.0;
  for (double vj : v) s += std::clamp(vj + shift, 0.0, cap);
  return s;
}

Vec clamped(std::span<const double> v, double shift, double cap) {
  Vec x(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) x[j] = std::clamp(v[j] + shift, 0.0, cap);
  return x;
}

double plain_sum(const Vec& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

}  // namespace

SimplexWeights project_simplex(std::span<const double> v) {
  if (v.empty()) throw DimensionError("project_simplex: empty vector");
  const std::size_t m = v.size();

  const bool nonneg = std::all_of(v.begin(), v.end(), [](double t) { return t >= 0.0; });
  if (nonneg) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::abs(s - 1.0) <= 4.0 * kEps * static_cast<double>(m)) return SimplexWeights(Vec(v.begin(), v.end()));
  }

  Vec u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }

  Vec y(m);
  for (std::size_t k = 0; k < m; ++k) y[k] = std::max(v[k] - theta, 0.0);
  const double s = plain_sum(y);
  for (double& t : y) t /= s;
  return SimplexWeights(std::move(y));
}

ProjectionResult project_box_budget_detailed(std::span<const double> v, const FeasibleSet& set) {
  set.validate();
  if (v.size() != set.slots) throw DimensionError("project_box_budget: size mismatch");
  const double cap = set.max_power;
  const double demand = set.demand;

  ProjectionResult result;
  result.point = clamped(v, 0.0, cap);

  if (plain_sum(result.point) < demand) {
    double inf_norm = 0.0;
    for (double t : v) inf_norm = std::max(inf_norm, std::abs(t));
    const double upper_bracket = demand + inf_norm + cap;
    double lo = 0.0;
    double hi = upper_bracket;
    const double target_tol = 1e-10 * std::max(1.0, demand);
    double lambda = hi;
    for (int it = 0; it < 200; ++it) {
      lambda = 0.5 * (lo + hi);
      const double excess = clamped_sum(v, lambda, cap) - demand;
      if (std::abs(excess) <= target_tol) break;
      (excess < 0.0 ? lo : hi) = lambda;
    }

    // Closed form on the free coordinates identified by bisection.
    std::size_t free_count = 0;
    std::size_t upper_count = 0;
    double free_sum = 0.0;
    for (double vj : v) {
      const double t = vj + lambda;
      if (t >= cap) {
        ++upper_count;
      } else if (t > 0.0) {
        ++free_count;
        free_sum += vj;
      }
    }
    if (free_count > 0) {
      const double exact =
          (demand - cap * static_cast<double>(upper_count) - free_sum) / static_cast<double>(free_count);
      if (std::abs(clamped_sum(v, exact, cap) - demand) <= std::abs(clamped_sum(v, lambda, cap) - demand))
        lambda = exact;
    }

    // Nudge upward until the floating-point sum meets the demand.
    result.point = clamped(v, lambda, cap);
    double step = std::max(1.0, std::abs(lambda)) * kEps;
    for (int it = 0; it < 64 && plain_sum(result.point) < demand; ++it) {
      lambda += step;
      step *= 2.0;
      result.point = clamped(v, lambda, cap);
    }
    if (plain_sum(result.point) < demand) result.point = clamped(v, upper_bracket, cap);
  }

  for (double t : result.point) {
    if (t <= kActiveTolerance) ++result.at_lower;
    if (t >= cap - kActiveTolerance) ++result.at_upper;
  }
  result.budget_active = std::abs(plain_sum(result.point) - demand) <= kActiveTolerance * std::max(1.0, demand);
  return result;
}

Vec project_box_budget(std::span<const double> v, const FeasibleSet& set) {
  return project_box_budget_detailed(v, set).point;
}

}  // namespace scenash
