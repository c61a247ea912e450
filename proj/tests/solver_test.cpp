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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "scenash/errors.hpp"
#include "scenash/ev_game.hpp"
#include "scenash/solver.hpp"

namespace scenash {
namespace {

SolverConfig tight_config() {
  SolverConfig c;
  c.gamma_out = 1e-10;
  c.eta0 = 1e-9;
  c.max_outer = 1000000;
  return c;
}

TEST_CASE("solver: a single scenario carries all the weight") {
  const EvInstance inst = make_ev_instance(3, 4, 1, {}, {}, 40);
  const EvChargingGame game(inst.params);
  const SolveResult r = solve_ne(game, inst.scenarios, SolverConfig{});
  REQUIRE(r.y_star.size() == 1);
  CHECK(r.y_star[0] == 1.0);
  CHECK(r.gamma_star == doctest::Approx(game.uncertain_cost(r.x_star, inst.scenarios[0])));
  CHECK(game.profile_feasible(r.x_star, 1e-9));
}

TEST_CASE("inner loop: scalar regularised game against the clipped quadratic") {
  for (std::uint64_t seed = 41; seed < 46; ++seed) {
    const EvInstance inst = make_ev_instance(1, 1, 1, {}, {}, seed);
    const EvChargingGame game(inst.params);
    const double centre_x = 0.5 * (inst.params.agents[0].demand + inst.params.agents[0].max_power);
    const AugmentedPoint centre{StrategyProfile(1, 1, Vec{centre_x}), SimplexWeights::uniform(1)};
    const double eta = 0.1, tau = 5.0;
    SolverConfig cfg;
    cfg.tau = tau;
    const InnerResult r = inner_loop(game, inst.scenarios, centre, eta, cfg);

    // With N = M = n = 1 the weight is fixed at 1, so x minimises a quadratic.
    auto q = [&](double t) {
      const StrategyProfile x(1, 1, Vec{t});
      return game.local_cost(0, x) + game.uncertain_cost(x, inst.scenarios[0]) + 0.5 * eta * t * t +
             0.5 * tau * (t - centre_x) * (t - centre_x);
    };
    const double q0 = q(0.0), q1 = q(1.0), q2 = q(2.0);
    const double curvature = 0.5 * (q0 - 2.0 * q1 + q2);
    const double slope = q1 - q0 - curvature;
    const double expected = std::clamp(-slope / (2.0 * curvature), inst.params.agents[0].demand,
                                       inst.params.agents[0].max_power);
    CHECK(std::abs(r.z.x.flat()[0] - expected) <= 1e-8);
  }
}

TEST_CASE("solver: restarting at the solution stops after one outer step") {
  const EvInstance inst = make_ev_instance(2, 3, 4, {}, {}, 47);
  const EvChargingGame game(inst.params);
  // The Tikhonov weight restarts at eta0, so keep it negligible here.
  SolverConfig cfg;
  cfg.eta0 = 1e-12;
  const SolveResult first = solve_ne(game, inst.scenarios, cfg);
  const SolveResult again = solve_ne_from(game, inst.scenarios, cfg, first.point());
  CHECK(again.trace.records.size() == 1);
}

TEST_CASE("solver: identical agents receive identical strategies") {
  EvInstance inst = make_ev_instance(3, 4, 6, {}, {}, 48);
  for (auto& a : inst.params.agents) a = inst.params.agents[0];
  const EvChargingGame game(inst.params);
  SolverConfig cfg = tight_config();
  cfg.initial_rule = InitialRule::kRandom;
  cfg.initial_seed = 9;
  const SolveResult r = solve_ne(game, inst.scenarios, cfg);
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t t = 0; t < 4; ++t)
      CHECK(std::abs(r.x_star.block(i)[t] - r.x_star.block(0)[t]) <= 1e-6);
}

TEST_CASE("solver: residuals, gaps and perturbations") {
  const EvInstance inst = make_ev_instance(3, 4, 8, {}, {}, 49);
  const EvChargingGame game(inst.params);
  const SolveResult r = solve_ne(game, inst.scenarios, SolverConfig{});
  const double at_star = vi_residual(game, inst.scenarios, r.point());
  CHECK(at_star == doctest::Approx(r.trace.final_vi_residual));
  CHECK(at_star <= 1e3 * SolverConfig{}.gamma_out);

  AugmentedPoint moved = r.point();
  moved.x = game.initial_profile(InitialRule::kMaxPower);
  CHECK(vi_residual(game, inst.scenarios, moved) > 10.0 * at_star);

  for (std::size_t i = 0; i < 3; ++i)
    CHECK(best_response_gap(game, inst.scenarios, r.x_star, i, tight_config()) <= 1e-5);

  // Everyone charging at full power is far from an equilibrium.
  const StrategyProfile full = game.initial_profile(InitialRule::kMaxPower);
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    worst = std::max(worst, best_response_gap(game, inst.scenarios, full, i, tight_config()));
  CHECK(worst > 1e-3);
  CHECK_THROWS_AS(best_response_gap(game, inst.scenarios, full, 3, tight_config()), DimensionError);
}

TEST_CASE("solver: regularised operator is tau-strongly monotone") {
  const EvInstance inst = make_ev_instance(4, 6, 10, {}, {}, 50);
  const EvChargingGame game(inst.params);
  for (double tau : {0.5, 5.0})
    CHECK(regularized_monotonicity_modulus(game, inst.scenarios, tau, 1e-3, 200, 3) >= tau - 1e-6);
  CHECK_THROWS(regularized_monotonicity_modulus(game, inst.scenarios, 1.0, 0.0, 0, 3));
}

TEST_CASE("solver: outer steps shrink near the end") {
  const EvInstance inst = make_ev_instance(5, 6, 20, {}, {}, 51);
  const EvChargingGame game(inst.params);
  const SolveResult r = solve_ne(game, inst.scenarios, SolverConfig{});
  const auto& rec = r.trace.records;
  REQUIRE(rec.size() > 50);
  for (std::size_t k = rec.size() - 50; k + 1 < rec.size(); ++k)
    CHECK(rec[k + 1].residual <= 1.5 * rec[k].residual);
  CHECK(rec.back().residual <= SolverConfig{}.gamma_out);
  for (std::size_t k = 0; k < rec.size(); ++k) CHECK(rec[k].eta == doctest::Approx(1e-3 / (k + 1.0)));
}

TEST_CASE("solver: observer sees every outer iteration") {
  const EvInstance inst = make_ev_instance(2, 2, 3, {}, {}, 52);
  const EvChargingGame game(inst.params);
  std::size_t calls = 0;
  const SolveResult r = solve_ne(game, inst.scenarios, SolverConfig{},
                                 [&](const OuterRecord& rec, const AugmentedPoint&) { CHECK(rec.k == calls++); });
  CHECK(calls == r.trace.records.size());
}

TEST_CASE("solver: trace csv") {
  const EvInstance inst = make_ev_instance(2, 2, 3, {}, {}, 53);
  const EvChargingGame game(inst.params);
  const SolveResult r = solve_ne(game, inst.scenarios, SolverConfig{});
  std::ostringstream out;
  r.trace.write_csv(out);
  const std::string text = out.str();
  CHECK(text.rfind("k,residual,inner_iters,eta\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == r.trace.records.size() + 1);
}

TEST_CASE("solver: config validation and caps") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.tau = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.eta0 = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.gamma_inn = 1e-3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.max_inner = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  const EvInstance inst = make_ev_instance(2, 2, 3, {}, {}, 54);
  const EvChargingGame game(inst.params);
  c = {};
  c.max_outer = 1;
  CHECK_THROWS_AS(solve_ne(game, inst.scenarios, c), ConvergenceError);
  c = {};
  c.max_inner = 1;
  CHECK_THROWS_AS(solve_ne(game, inst.scenarios, c), ConvergenceError);

  const EvInstance other = make_ev_instance(2, 3, 3, {}, {}, 55);
  CHECK_THROWS_AS(solve_ne(game, other.scenarios, SolverConfig{}), DimensionError);
}

}  // namespace
}  // namespace scenash
