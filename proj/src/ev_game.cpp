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

#include "scenash/ev_game.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "scenash/errors.hpp"
#include "scenash/projections.hpp"

namespace scenash {
namespace {

// f_i + ghat for one vehicle with the other vehicles' aggregate and the
// weighted scenario data precomputed. Everything is diagonal.
class EvAgentObjective final : public AgentObjective {
 public:
  EvAgentObjective(const Vec& a0, const Vec& b0, Vec others, Vec weighted_a, Vec weighted_b,
                   double inv_agents)
      : a0_(a0), b0_(b0), others_(std::move(others)), wa_(std::move(weighted_a)),
        wb_(std::move(weighted_b)), inv_agents_(inv_agents) {
    lipschitz_ = 0.0;
    strong_ = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a0_.size(); ++j) {
      const double h = 2.0 * a0_[j] + 2.0 * wa_[j] * inv_agents_;
      lipschitz_ = std::max(lipschitz_, h);
      strong_ = std::min(strong_, h);
    }
    strong_ = std::max(strong_, 0.0);
  }

  double value(std::span<const double> own) const override {
    double v = 0.0;
    for (std::size_t j = 0; j < own.size(); ++j) {
      const double sigma = own[j] + others_[j];
      v += own[j] * (a0_[j] * sigma + b0_[j]);
      v += inv_agents_ * sigma * (wa_[j] * sigma + wb_[j]);
    }
    return v;
  }

  void gradient(std::span<const double> own, std::span<double> out) const override {
    for (std::size_t j = 0; j < own.size(); ++j) {
      const double sigma = own[j] + others_[j];
      out[j] = a0_[j] * (own[j] + sigma) + b0_[j] + inv_agents_ * (2.0 * wa_[j] * sigma + wb_[j]);
    }
  }

  double lipschitz() const override { return lipschitz_; }
  double strong_convexity() const override { return strong_; }

 private:
  const Vec& a0_;
  const Vec& b0_;
  Vec others_;
  Vec wa_;
  Vec wb_;
  double inv_agents_;
  double lipschitz_;
  double strong_;
};

constexpr std::array<double, 24> kProfile = {
    0.050, 0.042, 0.036, 0.032, 0.030, 0.033, 0.045, 0.068, 0.085, 0.088, 0.084, 0.080,
    0.078, 0.076, 0.075, 0.080, 0.095, 0.115, 0.120, 0.112, 0.098, 0.084, 0.070, 0.058};

}  // namespace

const std::array<double, 24>& nominal_price_profile() { return kProfile; }

Vec nominal_price_slope(std::size_t n) {
  Vec a0(n);
  for (std::size_t j = 0; j < n; ++j) a0[j] = kProfile[j % kProfile.size()];
  return a0;
}

EvChargingGame::EvChargingGame(EvGameParams params) : params_(std::move(params)) {
  const std::size_t n = params_.a0.size();
  if (n == 0) throw DimensionError("a0 must be non-empty");
  if (params_.b0.empty()) params_.b0.assign(n, 0.0);
  if (params_.b0.size() != n) throw DimensionError("b0 must have the same length as a0");
  if (params_.agents.empty()) throw DimensionError("the game needs at least one agent");
  if (!std::all_of(params_.a0.begin(), params_.a0.end(), [](double v) { return v > 0.0; }))
    throw std::invalid_argument("a0 entries must be strictly positive");
  for (const auto& set : params_.agents) {
    if (set.slots != n) throw DimensionError("feasible set dimension must equal n");
    set.validate();
  }
}

double EvChargingGame::local_cost(std::size_t i, const StrategyProfile& x) const {
  check_profile(x);
  const Vec sigma = x.aggregate();
  auto xi = x.block(i);
  double v = 0.0;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    v += xi[j] * (params_.a0[j] * sigma[j] + params_.b0[j]);
  return v;
}

Vec EvChargingGame::local_cost_gradient(std::size_t i, const StrategyProfile& x) const {
  check_profile(x);
  const Vec sigma = x.aggregate();
  auto xi = x.block(i);
  Vec g(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j)
    g[j] = params_.a0[j] * sigma[j] + params_.b0[j] + params_.a0[j] * xi[j];
  return g;
}

double EvChargingGame::uncertain_cost_of_aggregate(std::span<const double> sigma,
                                                   const Scenario& theta) const {
  if (theta.a.size() != sigma.size()) throw DimensionError("scenario dimension must equal n");
  double v = 0.0;
  for (std::size_t j = 0; j < sigma.size(); ++j) v += sigma[j] * (theta.a[j] * sigma[j] + theta.b[j]);
  return v / static_cast<double>(num_agents());
}

double EvChargingGame::uncertain_cost(const StrategyProfile& x, const Scenario& theta) const {
  check_profile(x);
  const Vec sigma = x.aggregate();
  return uncertain_cost_of_aggregate(sigma, theta);
}

Vec EvChargingGame::uncertain_cost_gradient(std::size_t, const StrategyProfile& x,
                                            const Scenario& theta) const {
  check_profile(x);
  if (theta.a.size() != agent_dim()) throw DimensionError("scenario dimension must equal n");
  const Vec sigma = x.aggregate();
  const double inv = 1.0 / static_cast<double>(num_agents());
  Vec g(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) g[j] = inv * (2.0 * theta.a[j] * sigma[j] + theta.b[j]);
  return g;
}

Vec EvChargingGame::project(std::size_t i, std::span<const double> v) const {
  return project_box_budget(v, params_.agents.at(i));
}

bool EvChargingGame::feasible(std::size_t i, std::span<const double> v, double tol) const {
  return params_.agents.at(i).contains(v, tol);
}

Vec EvChargingGame::random_feasible(std::size_t i, Rng& rng) const {
  const auto& set = params_.agents.at(i);
  std::uniform_real_distribution<double> unit(0.0, set.max_power);
  Vec v(set.slots);
  for (double& t : v) t = unit(rng);
  return project(i, v);
}

StrategyProfile EvChargingGame::initial_profile(InitialRule rule, std::uint64_t seed) const {
  StrategyProfile x(num_agents(), agent_dim());
  Rng rng(seed);
  for (std::size_t i = 0; i < num_agents(); ++i) {
    const auto& set = params_.agents[i];
    auto xi = x.block(i);
    switch (rule) {
      case InitialRule::kBudgetUniform: {
        const double level = std::clamp(set.demand / static_cast<double>(set.slots), 0.0, set.max_power);
        std::fill(xi.begin(), xi.end(), level);
        const Vec p = project(i, xi);  // guards against rounding below E
        std::copy(p.begin(), p.end(), xi.begin());
        break;
      }
      case InitialRule::kMaxPower:
        std::fill(xi.begin(), xi.end(), set.max_power);
        break;
      case InitialRule::kRandom: {
        const Vec p = random_feasible(i, rng);
        std::copy(p.begin(), p.end(), xi.begin());
        break;
      }
    }
  }
  return x;
}

std::unique_ptr<AgentObjective> EvChargingGame::agent_objective(std::size_t i,
                                                                const StrategyProfile& x,
                                                                const ScenarioSet& scenarios,
                                                                const SimplexWeights& y) const {
  check_profile(x);
  if (y.size() != scenarios.size()) throw DimensionError("agent_objective: length(y) != M");
  if (scenarios.dim() != agent_dim()) throw DimensionError("scenario dimension must equal n");
  const std::size_t n = agent_dim();
  Vec others(n, 0.0);
  for (std::size_t k = 0; k < num_agents(); ++k) {
    if (k == i) continue;
    auto xk = x.block(k);
    for (std::size_t j = 0; j < n; ++j) others[j] += xk[j];
  }
  Vec wa(n, 0.0), wb(n, 0.0);
  for (std::size_t m = 0; m < scenarios.size(); ++m) {
    const double ym = y[m];
    if (ym == 0.0) continue;
    const auto& theta = scenarios[m];
    for (std::size_t j = 0; j < n; ++j) {
      wa[j] += ym * theta.a[j];
      wb[j] += ym * theta.b[j];
    }
  }
  return std::make_unique<EvAgentObjective>(params_.a0, params_.b0, std::move(others), std::move(wa),
                                            std::move(wb), 1.0 / static_cast<double>(num_agents()));
}

std::optional<MonotonicityConstants> EvChargingGame::monotonicity_constants() const {
  return MonotonicityConstants{*std::min_element(params_.a0.begin(), params_.a0.end()), 0.0};
}

void EvScenarioParams::validate() const {
  if (!(log_sd > 0.0)) throw std::invalid_argument("lognormal spread s must be positive");
  if (!(offset_lo <= offset_hi)) throw std::invalid_argument("offset range must satisfy lo <= hi");
}

EvScenarioSampler::EvScenarioSampler(std::size_t n, EvScenarioParams params)
    : n_(n), params_(params) {
  if (n == 0) throw DimensionError("scenario dimension must be positive");
  params_.validate();
}

Scenario EvScenarioSampler::draw(Rng& rng) const {
  std::lognormal_distribution<double> slope(params_.log_mean, params_.log_sd);
  std::uniform_real_distribution<double> offset(params_.offset_lo, params_.offset_hi);
  Scenario s{Vec(n_), Vec(n_)};
  for (std::size_t j = 0; j < n_; ++j) s.a[j] = slope(rng);
  for (std::size_t j = 0; j < n_; ++j) s.b[j] = offset(rng);
  return s;
}

ScenarioSet ev_sample_scenarios(std::size_t n, std::size_t m, const EvScenarioParams& params,
                                std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("scenario count M must be at least one");
  const EvScenarioSampler sampler(n, params);
  Rng rng(seed);
  std::vector<Scenario> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) out.push_back(sampler.draw(rng));
  return ScenarioSet(std::move(out));
}

std::vector<FeasibleSet> ev_sample_agents(std::size_t agents, std::size_t n,
                                          const EvAgentParams& params, std::uint64_t seed) {
  if (agents == 0) throw std::invalid_argument("agent count N must be at least one");
  if (n == 0) throw DimensionError("slot count must be positive");
  if (!(params.power_lo > 0.0) || params.power_lo > params.power_hi)
    throw std::invalid_argument("charger power range must satisfy 0 < lo <= hi");
  Rng rng(seed);
  std::uniform_real_distribution<double> power(params.power_lo, params.power_hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double slots = static_cast<double>(n);
  std::vector<FeasibleSet> out;
  out.reserve(agents);
  for (std::size_t i = 0; i < agents; ++i) {
    FeasibleSet set;
    set.slots = n;
    set.max_power = power(rng);
    const double ceiling = std::min(slots * set.max_power, params.kwh_per_12h * slots / 12.0);
    set.demand = ceiling * unit(rng);
    out.push_back(set);
  }
  return out;
}

void EvInstance::validate() const {
  const EvChargingGame game(params);  // validates a0, b0 and the feasible sets
  if (scenarios.dim() != game.agent_dim()) throw DimensionError("scenario dimension must equal n");
  if (!scenarios.curvatures_positive())
    throw std::invalid_argument("scenario slopes a_m must be strictly positive");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EvInstance make_ev_instance(std::size_t agents, std::size_t n, std::size_t m,
                            const EvScenarioParams& scenario_params,
                            const EvAgentParams& agent_params, std::uint64_t seed) {
  EvGameParams params;
  params.a0 = nominal_price_slope(n);
  params.b0.assign(n, 0.0);
  params.agents = ev_sample_agents(agents, n, agent_params, derive_seed(seed, 1));
  EvInstance instance{std::move(params),
                      ev_sample_scenarios(n, m, scenario_params, derive_seed(seed, 2))};
  instance.validate();
  return instance;
}

}  // namespace scenash
