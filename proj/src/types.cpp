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

#include "scenash/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "scenash/errors.hpp"

namespace scenash {

ScenarioSet::ScenarioSet(std::vector<Scenario> scenarios) : scenarios_(std::move(scenarios)) {
  if (scenarios_.empty()) throw DimensionError("scenario set must hold at least one scenario");
  const std::size_t n = scenarios_.front().a.size();
  if (n == 0) throw DimensionError("scenario payloads must be non-empty");
  for (const auto& s : scenarios_) {
    if (s.a.size() != n || s.b.size() != n)
      throw DimensionError("scenario payloads must share dimension " + std::to_string(n));
  }
}

bool ScenarioSet::curvatures_positive() const {
  return std::all_of(scenarios_.begin(), scenarios_.end(), [](const Scenario& s) {
    return std::all_of(s.a.begin(), s.a.end(), [](double v) { return v > 0.0; });
  });
}

ScenarioSet ScenarioSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Scenario> picked;
  picked.reserve(indices.size());
  for (std::size_t m : indices) {
    if (m >= scenarios_.size()) throw DimensionError("scenario index out of range");
    picked.push_back(scenarios_[m]);
  }
  return ScenarioSet(std::move(picked));
}

ScenarioSet ScenarioSet::with_appended(Scenario extra) const {
  std::vector<Scenario> all = scenarios_;
  all.push_back(std::move(extra));
  return ScenarioSet(std::move(all));
}

StrategyProfile::StrategyProfile(std::size_t agents, std::size_t dim, double fill)
    : agents_(agents), dim_(dim), flat_(agents * dim, fill) {
  if (agents == 0 || dim == 0) throw DimensionError("strategy profile needs N >= 1 and n >= 1");
}

StrategyProfile::StrategyProfile(std::size_t agents, std::size_t dim, Vec flat)
    : agents_(agents), dim_(dim), flat_(std::move(flat)) {
  if (agents == 0 || dim == 0) throw DimensionError("strategy profile needs N >= 1 and n >= 1");
  if (flat_.size() != agents * dim) throw DimensionError("strategy profile length must be nN");
}

Vec StrategyProfile::aggregate() const {
  Vec sigma(dim_, 0.0);
  for (std::size_t i = 0; i < agents_; ++i) {
    auto xi = block(i);
    for (std::size_t j = 0; j < dim_; ++j) sigma[j] += xi[j];
  }
  return sigma;
}

SimplexWeights::SimplexWeights(Vec y) : y_(std::move(y)) {
  if (y_.empty()) throw DimensionError("simplex weights must be non-empty");
  double sum = 0.0;
  for (double v : y_) {
    if (!(v >= -kNegativeDust)) throw std::invalid_argument("simplex weight below zero");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("simplex weights must sum to one");
}

SimplexWeights SimplexWeights::uniform(std::size_t m) {
  if (m == 0) throw DimensionError("simplex weights must be non-empty");
  return SimplexWeights(Vec(m, 1.0 / static_cast<double>(m)));
}

SimplexWeights SimplexWeights::vertex(std::size_t m, std::size_t k) {
  if (k >= m) throw DimensionError("vertex index out of range");
  Vec y(m, 0.0);
  y[k] = 1.0;
  return SimplexWeights(std::move(y));
}

Vec AugmentedPoint::stacked() const {
  Vec z = x.flat();
  z.insert(z.end(), y.values().begin(), y.values().end());
  return z;
}

void FeasibleSet::validate() const {
  if (!(max_power > 0.0)) throw InfeasibleSetError("charger cap P must be positive");
  if (slots == 0) throw InfeasibleSetError("slot count must be positive");
  if (!(demand >= 0.0) || demand > static_cast<double>(slots) * max_power)
    throw InfeasibleSetError("charge demand E must lie in [0, n*P]");
}

bool FeasibleSet::contains(std::span<const double> x, double tol) const {
  if (x.size() != slots) return false;
  double total = 0.0;
  for (double v : x) {
    if (v < -tol || v > max_power + tol) return false;
    total += v;
  }
  return total >= demand - tol;
}

double dot(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DimensionError("dot: size mismatch");
  return std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DimensionError("distance: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
  return std::sqrt(s);
}

double max_abs_diff(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DimensionError("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) m = std::max(m, std::abs(u[k] - v[k]));
  return m;
}

double distance(const AugmentedPoint& u, const AugmentedPoint& v) {
  const double dx = distance(u.x.flat(), v.x.flat());
  const double dy = distance(u.y.values(), v.y.values());
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace scenash
