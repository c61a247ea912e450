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

// Compression sets: subsets C of the training scenarios with Phi(C) = Phi(S),
// where Phi maps a scenario set to the equilibrium returned by solve_ne.
// Indices are 0-based here; the JSON layer reports them 1-based.

#ifndef SCENASH_COMPRESSION_HPP_
#define SCENASH_COMPRESSION_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "scenash/game.hpp"
#include "scenash/solver.hpp"
#include "scenash/types.hpp"

namespace scenash {

enum class CompressionMethod { kSupportInspection, kGreedy };
enum class Verification { kVerified, kUnverified, kFailed };

std::string_view to_string(CompressionMethod method);
std::string_view to_string(Verification verification);

struct CompressionReport {
  std::vector<std::size_t> indices;  // sorted
  CompressionMethod method = CompressionMethod::kSupportInspection;
  Verification verification = Verification::kUnverified;
  double equality_tolerance = 0.0;

  std::size_t cardinality() const noexcept { return indices.size(); }
};

/// Greedy elimination stopped on a solver failure; `partial` holds the set
/// reached so far.
class CompressionAborted : public std::runtime_error {
 public:
  CompressionAborted(const std::string& what, CompressionReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const CompressionReport& partial() const noexcept { return partial_; }

 private:
  CompressionReport partial_;
};

/// max(1e-6, 10 gamma_out sqrt(nN)).
double equality_tolerance(const SolverConfig& config, std::size_t agents, std::size_t dim);

/// {m : y_m > tol_y}. Throws std::runtime_error if no weight exceeds tol_y.
std::vector<std::size_t> support_from_weights(const SimplexWeights& y, double tol_y = 1e-8);

/// Solves on the scenarios in `indices` and checks |Phi(C) - x*|_inf <= delta.
bool verify_compression(const Game& game, const ScenarioSet& scenarios,
                        std::span<const std::size_t> indices, const StrategyProfile& x_star,
                        const SolverConfig& config, double delta);

/// Support of y*, optionally verified by a re-solve.
CompressionReport support_compression(const Game& game, const ScenarioSet& scenarios,
                                      const SolveResult& solution, const SolverConfig& config,
                                      double delta, bool verify = true, double tol_y = 1e-8);

/**
 * Greedy elimination. Scenarios are visited in ascending order of y*_m (ties
 * by index); scenario m is dropped when the equilibrium of the remaining set
 * stays within `delta` of x* in the sup norm. The last remaining scenario is
 * never dropped. The result is verified by construction unless C ends up
 * equal to S, in which case it is verified trivially.
 */
CompressionReport greedy_compression(const Game& game, const ScenarioSet& scenarios,
                                     const SolveResult& solution, const SolverConfig& config,
                                     double delta);

}  // namespace scenash

#endif  // SCENASH_COMPRESSION_HPP_
