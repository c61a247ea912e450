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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any selected criterion fails.
//
//   acceptance               all criteria
//   acceptance --criterion 4 just one

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scenash/certificates.hpp"
#include "scenash/compression.hpp"
#include "scenash/ev_game.hpp"
#include "scenash/experiments.hpp"
#include "scenash/probes.hpp"
#include "scenash/solver.hpp"
#include "scenash/subproblems.hpp"

namespace {

using namespace scenash;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// The ten small instances shared by criteria 3-6 and 10.
struct SmallCase {
  int index;
  std::size_t agents, dim, samples;
  std::uint64_t seed;
};

std::vector<SmallCase> small_cases() {
  const std::size_t agents[] = {2, 3, 5}, dims[] = {2, 4}, samples[] = {5, 20};
  std::vector<SmallCase> out;
  for (int s = 0; s < 10; ++s)
    out.push_back({s, agents[s % 3], dims[(s / 3) % 2], samples[(s / 2) % 2], 100u + static_cast<unsigned>(s)});
  return out;
}

struct Solved {
  SmallCase c;
  EvInstance instance;
  EvChargingGame game;
  SolveResult result;
};

Solved solve_case(const SmallCase& c, const SolverConfig& cfg) {
  EvInstance inst = make_ev_instance(c.agents, c.dim, c.samples, {}, {}, c.seed);
  EvChargingGame game(inst.params);
  SolveResult r = solve_ne(game, inst.scenarios, cfg);
  return {c, std::move(inst), std::move(game), std::move(r)};
}

std::string case_name(const SmallCase& c) {
  return format("#%d(N=%zu,n=%zu,M=%zu)", c.index, c.agents, c.dim, c.samples);
}

Outcome certificate_reproduction() {
  const std::size_t ks[] = {4, 6, 7, 9};
  const double split_pct[] = {8.06, 9.76, 10.55, 12.06};
  const double wj_pct[] = {5.30, 6.11, 6.49, 7.22};
  double worst_split = 0.0, worst_wj = 0.0;
  for (int j = 0; j < 4; ++j) {
    worst_split = std::max(worst_split, std::abs(100.0 * eps_split(500, 1e-6, ks[j]) - split_pct[j]));
    worst_wj = std::max(worst_wj, std::abs(100.0 * eps_wait_judge(500, 1e-6, ks[j]) - wj_pct[j]));
  }
  return {worst_split <= 0.05 && worst_wj <= 0.1,
          format("max |split - ref| %.4f pp (tol 0.05), max |wait-and-judge - ref| %.4f pp (tol 0.1)",
                 worst_split, worst_wj)};
}

Outcome split_identity() {
  double worst = 0.0;
  for (std::size_t M : {10u, 100u, 500u, 2000u})
    for (double beta : {0.05, 1e-6}) worst = std::max(worst, verify_split_identity(M, beta));
  return {worst <= 1e-6, format("max relative deviation %.3g (tol 1e-6)", worst)};
}

SolverConfig gap_config() {
  SolverConfig c;
  c.gamma_out = 1e-10;
  c.eta0 = 1e-9;
  c.max_outer = 1000000;
  return c;
}

Outcome ne_correctness() {
  const SolverConfig cfg;
  double worst_gap = 0.0, worst_vi = 0.0;
  std::string where;
  for (const auto& c : small_cases()) {
    const Solved s = solve_case(c, cfg);
    for (std::size_t i = 0; i < c.agents; ++i) {
      const double gap = best_response_gap(s.game, s.instance.scenarios, s.result.x_star, i, gap_config());
      if (gap > worst_gap) {
        worst_gap = gap;
        where = case_name(c);
      }
    }
    worst_vi = std::max(worst_vi, vi_residual(s.game, s.instance.scenarios, s.result.point()));
  }
  return {worst_gap <= 1e-5 && worst_vi <= 1e3 * cfg.gamma_out,
          format("max best-response gap %.3g at %s (tol 1e-5), max VI residual %.3g (tol %.3g)", worst_gap,
                 where.c_str(), worst_vi, 1e3 * cfg.gamma_out)};
}

Outcome single_valuedness() {
  SolverConfig a, b;
  a.initial_rule = InitialRule::kBudgetUniform;
  b.initial_rule = InitialRule::kMaxPower;
  const double tol = 10.0 * a.gamma_out;
  double worst = 0.0;
  int failing = 0;
  for (const auto& c : small_cases()) {
    const Solved s = solve_case(c, a);
    const SolveResult r = solve_ne(s.game, s.instance.scenarios, b);
    const double d = max_abs_diff(s.result.x_star.flat(), r.x_star.flat());
    worst = std::max(worst, d);
    if (d > tol) ++failing;
  }
  return {failing == 0, format("max |x*(budget_uniform) - x*(max_power)|_inf %.3g (tol %.3g), %d/10 instances over",
                               worst, tol, failing)};
}

Outcome compression_soundness() {
  const SolverConfig cfg;
  int support_ok = 0, greedy_ok = 0;
  std::string failures;
  for (const auto& c : small_cases()) {
    const Solved s = solve_case(c, cfg);
    const double delta = equality_tolerance(cfg, c.agents, c.dim);
    const CompressionReport support = support_compression(s.game, s.instance.scenarios, s.result, cfg, delta);
    const CompressionReport greedy = greedy_compression(s.game, s.instance.scenarios, s.result, cfg, delta);
    const bool support_verified = support.verification == Verification::kVerified;
    const bool inside = std::includes(support.indices.begin(), support.indices.end(), greedy.indices.begin(),
                                      greedy.indices.end());
    const bool greedy_verified = greedy.verification == Verification::kVerified &&
                                 verify_compression(s.game, s.instance.scenarios, greedy.indices,
                                                    s.result.x_star, cfg, delta);
    support_ok += support_verified;
    greedy_ok += inside && greedy_verified;
    if (!support_verified || !inside || !greedy_verified)
      failures += format(" %s[support %s, greedy k=%zu %s%s]", case_name(c).c_str(),
                         support_verified ? "ok" : "unverified", greedy.cardinality(),
                         inside ? "inside" : "not inside", greedy_verified ? "" : ", unverified");
  }
  return {support_ok == 10 && greedy_ok == 10,
          format("support verified %d/10, greedy inside support and verified %d/10", support_ok, greedy_ok) +
              failures};
}

Outcome complementarity() {
  const SolverConfig cfg;
  double worst_gap = 0.0, worst_weight = 0.0;
  bool pass = true;
  for (const auto& c : small_cases()) {
    const Solved s = solve_case(c, cfg);
    const double gamma = s.result.gamma_star;
    const double tol = 1e-6 * (1.0 + std::abs(gamma));
    const double weighted = eval_ghat(s.game, s.result.x_star, s.result.y_star, s.instance.scenarios);
    const double gap = std::abs(weighted - gamma);
    worst_gap = std::max(worst_gap, gap / (1.0 + std::abs(gamma)));
    if (gap > tol) pass = false;
    const Vec costs = scenario_costs(s.game, s.result.x_star, s.instance.scenarios);
    for (std::size_t m = 0; m < costs.size(); ++m) {
      if (costs[m] >= gamma - tol) continue;
      worst_weight = std::max(worst_weight, s.result.y_star[m]);
      if (s.result.y_star[m] > 1e-8) pass = false;
    }
  }
  return {pass, format("max |y'g - gamma*| / (1+|gamma*|) %.3g (tol 1e-6), max inactive weight %.3g (tol 1e-8)",
                       worst_gap, worst_weight)};
}

Outcome violation_conformance() {
  ExperimentConfig cfg;
  cfg.agents = 5;
  cfg.dim = 6;
  cfg.samples = 500;
  cfg.beta = 1e-6;
  cfg.fresh_draws = 10000;
  for (std::uint64_t s = 1; s <= 20; ++s) cfg.seeds.push_back(s);
  const CertificateTable table = run_certificate_table(cfg);
  int conforming = 0;
  double lo_rate = 1.0, hi_rate = 0.0, lo_bound = 1.0, hi_bound = 0.0;
  for (const auto& run : table.runs) {
    conforming += run.empirical_rate <= run.eps_wait_judge && run.eps_wait_judge <= run.eps_split;
    lo_rate = std::min(lo_rate, run.empirical_rate);
    hi_rate = std::max(hi_rate, run.empirical_rate);
    lo_bound = std::min(lo_bound, run.eps_wait_judge);
    hi_bound = std::max(hi_bound, run.eps_split);
  }
  const bool pass = table.failed_seeds.empty() && conforming == 20 && table.all_verified();
  return {pass, format("%d/20 runs with rate <= wait-and-judge <= split, %zu solver failures, rates %.2f-%.2f%%, "
                       "bounds %.2f-%.2f%%",
                       conforming, table.failed_seeds.size(), 100.0 * lo_rate, 100.0 * hi_rate, 100.0 * lo_bound,
                       100.0 * hi_bound)};
}

Outcome a_priori_bound() {
  ExperimentConfig cfg;
  cfg.agents = 5;
  cfg.dim_list = {2, 6, 12};
  cfg.samples_list = {100, 500};
  for (std::uint64_t s = 1; s <= 10; ++s) cfg.seeds.push_back(s);
  const ScalingSweep sweep = run_dstar_scaling(cfg);
  std::string rows;
  bool soft = true;
  for (const auto& r : sweep.rows) {
    rows += format(" n=%zu,M=%zu:max %zu/%zu", r.dim, r.samples, r.max_d_star, r.bound);
    soft = soft && r.d_star_le_n;
  }
  return {sweep.failed_seeds.empty() && sweep.within_bound(),
          format("every d* <= (n+1)N: %s, %zu solver failures, soft d* <= n: %s;", sweep.within_bound() ? "yes" : "no",
                 sweep.failed_seeds.size(), soft ? "yes" : "no") +
              rows};
}

Outcome max_simplex_equivalence() {
  Rng rng(2026);
  std::uniform_int_distribution<std::size_t> agents(1, 5), dim(1, 8), samples(1, 40);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const EvInstance inst = make_ev_instance(agents(rng), dim(rng), samples(rng), {}, {}, 5000u + t);
    const EvChargingGame game(inst.params);
    StrategyProfile x(game.num_agents(), game.agent_dim());
    for (std::size_t i = 0; i < game.num_agents(); ++i) {
      const Vec xi = game.random_feasible(i, rng);
      std::copy(xi.begin(), xi.end(), x.block(i).begin());
    }
    const Vec costs = scenario_costs(game, x, inst.scenarios);
    // The coordinator best response with a vanishing proximal weight
    // concentrates on the maximisers.
    const SimplexWeights w =
        solve_coordinator_subproblem(costs, SimplexWeights::uniform(costs.size()), 0.0, 1e-9);
    worst = std::max(worst, std::abs(worst_case_cost(game, x, inst.scenarios) - dot(w.values(), costs)));
  }
  return {worst <= 1e-8, format("max |max_m g - max_y ghat| %.3g over 100 points (tol 1e-8)", worst)};
}

Outcome monotonicity() {
  const SolverConfig cfg;
  double worst_inner = std::numeric_limits<double>::infinity();
  double worst_modulus = std::numeric_limits<double>::infinity();
  bool probes = true;
  for (const auto& c : small_cases()) {
    const EvInstance inst = make_ev_instance(c.agents, c.dim, c.samples, {}, {}, c.seed);
    const EvChargingGame game(inst.params);
    const MonotonicityReport r = monotonicity_probe(game, inst.scenarios, 1000, c.seed);
    probes = probes && r.pass;
    worst_inner = std::min(worst_inner, r.min_inner_product);
    worst_modulus = std::min(worst_modulus, regularized_monotonicity_modulus(game, inst.scenarios, cfg.tau,
                                                                             cfg.eta0, 1000, c.seed));
  }
  return {probes && worst_modulus >= cfg.tau - 1e-6,
          format("probe %s (min inner product %.3g), min regularised modulus %.6f (need >= %.6f)",
                 probes ? "passed" : "failed", worst_inner, worst_modulus, cfg.tau - 1e-6)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for scenario-nash"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "certificate reproduction", 1.0, certificate_reproduction},
      {2, "split identity", 5.0, split_identity},
      {3, "equilibrium correctness", 120.0, ne_correctness},
      {4, "single-valuedness", 0.0, single_valuedness},
      {5, "compression soundness", 600.0, compression_soundness},
      {6, "complementarity", 0.0, complementarity},
      {7, "violation-bound conformance", 900.0, violation_conformance},
      {8, "a priori bound", 0.0, a_priori_bound},
      {9, "max-simplex equivalence", 0.0, max_simplex_equivalence},
      {10, "monotonicity", 0.0, monotonicity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    std::string timing = format("%.2fs", seconds);
    if (c.budget_seconds > 0.0) {
      timing += format(" (budget %.0fs)", c.budget_seconds);
      if (seconds > c.budget_seconds) pass = false;
    }
    std::printf("criterion %2d %s  %s: %s [%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    failed += !pass;
  }
  return failed == 0 ? 0 : 1;
}
