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

#include <cmath>

#include "doctest.h"
#include "scenash/compression.hpp"
#include "scenash/validation.hpp"

namespace scenash {
namespace {

SolverConfig accurate() {
  SolverConfig c;
  c.gamma_out = 1e-9;
  c.eta0 = 1e-6;
  c.max_outer = 1000000;
  return c;
}

// Always returns the same very expensive scenario.
class SpikeSampler final : public ScenarioSampler {
 public:
  explicit SpikeSampler(std::size_t n) : n_(n) {}
  Scenario draw(Rng&) const override { return {Vec(n_, 100.0), Vec(n_, 100.0)}; }

 private:
  std::size_t n_;
};

struct Fixture {
  EvInstance inst = make_ev_instance(3, 3, 10, {}, {}, 70);
  EvChargingGame game{inst.params};
  SolverConfig cfg = accurate();
  SolveResult solution = solve_ne(game, inst.scenarios, cfg);
  double delta = equality_tolerance(cfg, 3, 3);
};

TEST_CASE("cost violation: replaying the training set never violates") {
  Fixture f;
  const ReplaySampler replay(f.inst.scenarios);
  const ViolationEstimate e =
      empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star, replay, 500, 1);
  CHECK(e.violations == 0);
  CHECK(e.rate == 0.0);
  CHECK(e.kind == ViolationKind::kCostViolation);
}

TEST_CASE("cost violation: an always-worse scenario always violates") {
  Fixture f;
  const ViolationEstimate e = empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star,
                                                       SpikeSampler(3), 50, 1);
  CHECK(e.rate == 1.0);
  CHECK(e.heuristic_width() == doctest::Approx(1.0 / std::sqrt(50.0)));
}

TEST_CASE("cost violation: deterministic in the seed") {
  Fixture f;
  const EvScenarioSampler sampler(3, {});
  std::vector<double> c1, c2;
  std::vector<bool> f1, f2;
  const ViolationEstimate a =
      empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star, sampler, 2000, 9, &c1, &f1);
  const ViolationEstimate b =
      empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star, sampler, 2000, 9, &c2, &f2);
  CHECK(a.violations == b.violations);
  CHECK(c1 == c2);
  CHECK(f1 == f2);
  REQUIRE(c1.size() == 2000);
  for (std::size_t t = 0; t < c1.size(); ++t) CHECK(f1[t] == (c1[t] > f.solution.gamma_star));
  CHECK_THROWS(empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star, sampler, 0, 9));
}

TEST_CASE("equilibrium change: implies a cost violation") {
  Fixture f;
  const EvScenarioSampler sampler(3, {});
  const std::size_t trials = 60;
  std::vector<bool> ne_flags, cost_flags;
  const ViolationEstimate ne = empirical_violation_ne(f.game, f.inst.scenarios, f.solution.x_star, sampler,
                                                      trials, f.cfg, f.delta, 11, &ne_flags);
  const ViolationEstimate cost = empirical_violation_cost(f.game, f.solution.x_star, f.solution.gamma_star,
                                                          sampler, trials, 11, nullptr, &cost_flags);
  CHECK(ne.kind == ViolationKind::kNeChange);
  CHECK(ne.failures == 0);
  for (std::size_t t = 0; t < trials; ++t)
    if (ne_flags[t]) CHECK(cost_flags[t]);
  CHECK(ne.rate <= cost.rate + 2.0 / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("equilibrium change: duplicated training scenarios change nothing") {
  Fixture f;
  const ReplaySampler replay(f.inst.scenarios);
  const ViolationEstimate e =
      empirical_violation_ne(f.game, f.inst.scenarios, f.solution.x_star, replay, 20, f.cfg, f.delta, 3);
  CHECK(e.violations == 0);
}

TEST_CASE("conformance") {
  ViolationEstimate e;
  e.trials = 10000;
  e.rate = 0.011;
  CHECK(certificate_conformance(e, a_posteriori(500, 1e-6, 4, CertificateKind::kSplit)));
  e.rate = 0.0;
  CHECK(certificate_conformance(e, a_posteriori(500, 1e-6, 4, CertificateKind::kSplit)));
  e.rate = 1.0;
  CHECK_FALSE(certificate_conformance(e, a_posteriori(500, 1e-6, 4, CertificateKind::kWaitAndJudge)));
  CHECK(to_string(ViolationKind::kNeChange) == "ne_change");
}

}  // namespace
}  // namespace scenash
