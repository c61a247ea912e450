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

#include "scenash/compression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scenash/errors.hpp"

namespace scenash {
namespace {

void check_indices(std::span<const std::size_t> indices, std::size_t m) {
  if (indices.empty()) throw std::invalid_argument("compression set must be nonempty");
  for (std::size_t idx : indices)
    if (idx >= m) throw DimensionError("compression index out of range");
}

}  // namespace

std::string_view to_string(CompressionMethod method) {
  return method == CompressionMethod::kGreedy ? "greedy" : "support_inspection";
}

std::string_view to_string(Verification verification) {
  switch (verification) {
    case Verification::kVerified: return "verified";
    case Verification::kUnverified: return "unverified";
    case Verification::kFailed: return "failed";
  }
  return "unknown";
}

double equality_tolerance(const SolverConfig& config, std::size_t agents, std::size_t dim) {
  return std::max(1e-6, 10.0 * config.gamma_out * std::sqrt(static_cast<double>(agents * dim)));
}

std::vector<std::size_t> support_from_weights(const SimplexWeights& y, double tol_y) {
  std::vector<std::size_t> support;
  for (std::size_t m = 0; m < y.size(); ++m)
    if (y[m] > tol_y) support.push_back(m);
  if (support.empty())
    throw std::runtime_error("support_from_weights: every weight is below the threshold");
  return support;
}

bool verify_compression(const Game& game, const ScenarioSet& scenarios,
                        std::span<const std::size_t> indices, const StrategyProfile& x_star,
                        const SolverConfig& config, double delta) {
  check_indices(indices, scenarios.size());
  game.check_profile(x_star);
  const SolveResult reduced = solve_ne(game, scenarios.subset(indices), config);
  return max_abs_diff(reduced.x_star.flat(), x_star.flat()) <= delta;
}

CompressionReport support_compression(const Game& game, const ScenarioSet& scenarios,
                                      const SolveResult& solution, const SolverConfig& config,
                                      double delta, bool verify, double tol_y) {
  if (solution.y_star.size() != scenarios.size())
    throw DimensionError("support_compression: length(y*) != M");
  CompressionReport report{support_from_weights(solution.y_star, tol_y),
                           CompressionMethod::kSupportInspection, Verification::kUnverified, delta};
  if (verify)
    report.verification =
        verify_compression(game, scenarios, report.indices, solution.x_star, config, delta)
            ? Verification::kVerified
            : Verification::kFailed;
  return report;
}

CompressionReport greedy_compression(const Game& game, const ScenarioSet& scenarios,
                                     const SolveResult& solution, const SolverConfig& config,
                                     double delta) {
  const std::size_t m_total = scenarios.size();
  if (solution.y_star.size() != m_total) throw DimensionError("greedy_compression: length(y*) != M");
  game.check_profile(solution.x_star);

  std::vector<std::size_t> order(m_total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return solution.y_star[a] < solution.y_star[b];
  });

  std::vector<bool> kept(m_total, true);
  std::size_t remaining = m_total;
  auto current_set = [&] {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < m_total; ++m)
      if (kept[m]) out.push_back(m);
    return out;
  };

  for (std::size_t m : order) {
    if (remaining == 1) break;
    kept[m] = false;
    const std::vector<std::size_t> trial = current_set();
    bool unchanged = false;
    try {
      const SolveResult reduced = solve_ne(game, scenarios.subset(trial), config);
      unchanged = max_abs_diff(reduced.x_star.flat(), solution.x_star.flat()) <= delta;
    } catch (const ConvergenceError& e) {
      kept[m] = true;
      throw CompressionAborted(std::string("greedy_compression: ") + e.what(),
                               {current_set(), CompressionMethod::kGreedy, Verification::kUnverified, delta});
    }
    if (unchanged) {
      --remaining;
    } else {
      kept[m] = true;
    }
  }
  return {current_set(), CompressionMethod::kGreedy, Verification::kVerified, delta};
}

}  // namespace scenash
