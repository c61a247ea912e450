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

// Decentralised equilibrium seeking for the scenario game.
//
// The outer loop is a proximal-point iteration zbar <- S(zbar), where S(zbar)
// is the unique equilibrium of the game regularised by eta_k/2 |z|^2 and
// tau/2 |z - zbar|^2. The inner loop finds S(zbar) by Jacobi sweeps: every
// agent and the coordinator best-respond to the previous sweep's state. The
// vanishing Tikhonov weight eta_k = eta0 / (k + 1) steers the limit towards
// the minimum-norm solution, so the map from scenarios to equilibrium is
// single-valued.

#ifndef SCENASH_SOLVER_HPP_
#define SCENASH_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "scenash/game.hpp"
#include "scenash/subproblems.hpp"
#include "scenash/types.hpp"

namespace scenash {

struct SolverConfig {
  double tau = 5.0;
  double eta0 = 1e-3;
  double gamma_inn = 1e-14;
  double gamma_out = 1e-5;
  std::size_t max_inner = 10000;
  std::size_t max_outer = 20000;
  InitialRule initial_rule = InitialRule::kBudgetUniform;
  std::uint64_t initial_seed = 0;
  SubproblemOptions subproblem;

  /// eta^(k) = eta0 / (k + 1).
  double eta(std::size_t k) const { return eta0 / static_cast<double>(k + 1); }
  /// Throws std::invalid_argument unless tau > 0, eta0 > 0 and
  /// 0 < gamma_inn < gamma_out.
  void validate() const;
};

struct OuterRecord {
  std::size_t k = 0;
  double residual = 0.0;  // |zbar^(k+1) - zbar^(k)|
  std::size_t inner_iterations = 0;
  double eta = 0.0;
};

struct SolveTrace {
  std::vector<OuterRecord> records;
  double final_vi_residual = 0.0;

  /// CSV with header k,residual,inner_iters,eta.
  void write_csv(std::ostream& out) const;
};

struct InnerResult {
  AugmentedPoint z;
  std::size_t iterations = 0;
  double last_change = 0.0;
};

/// Jacobi sweeps on the game regularised around `centre` with weight `eta`,
/// starting from the centre, until |z^(l) - z^(l-1)| <= gamma_inn.
InnerResult inner_loop(const Game& game, const ScenarioSet& scenarios, const AugmentedPoint& centre,
                       double eta, const SolverConfig& config);

struct SolveResult {
  StrategyProfile x_star;
  SimplexWeights y_star;
  double gamma_star = 0.0;  // max_m g(x*, theta_m)
  SolveTrace trace;

  AugmentedPoint point() const { return {x_star, y_star}; }
};

/// Called after every outer iteration with the new centre.
using OuterObserver = std::function<void(const OuterRecord&, const AugmentedPoint&)>;

/// Runs the proximal scheme from the config's initial rule with uniform
/// weights until |zbar^(k) - zbar^(k-1)| <= gamma_out. Throws
/// ConvergenceError on either iteration cap.
SolveResult solve_ne(const Game& game, const ScenarioSet& scenarios, const SolverConfig& config,
                     const OuterObserver& observer = {});

/// Same, from an explicit starting point.
SolveResult solve_ne_from(const Game& game, const ScenarioSet& scenarios, const SolverConfig& config,
                          const AugmentedPoint& start, const OuterObserver& observer = {});

/// Natural residual |z - Proj_{X x Delta}(z - F(z))|, zero exactly at
/// solutions of the equilibrium VI.
double vi_residual(const Game& game, const ScenarioSet& scenarios, const AugmentedPoint& z);

/// J_i(x*) - min_{v in X_i} J_i(v, x*_{-i}), clipped at zero. The minimum is
/// found by running the proximal scheme with only agent i and the
/// coordinator active, which solves the epigraph form
/// min f_i + gamma s.t. g(., theta_m) <= gamma through its multipliers.
double best_response_gap(const Game& game, const ScenarioSet& scenarios,
                         const StrategyProfile& x_star, std::size_t i, const SolverConfig& config);

/// Smallest observed (u-v)'(F_reg(u) - F_reg(v)) / |u-v|^2 over random pairs
/// of feasible points, where F_reg(z) = F(z) + eta z + tau (z - zbar).
double regularized_monotonicity_modulus(const Game& game, const ScenarioSet& scenarios, double tau,
                                        double eta, std::size_t trials, std::uint64_t seed);

}  // namespace scenash

#endif  // SCENASH_SOLVER_HPP_
