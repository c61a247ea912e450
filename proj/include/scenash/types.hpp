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

// Core value types shared by every module: scenarios, strategy profiles,
// simplex weights and the per-agent charging constraint set.

#ifndef SCENASH_TYPES_HPP_
#define SCENASH_TYPES_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace scenash {

using Vec = std::vector<double>;

/// One uncertainty realisation. For the charging game `a` holds the diagonal
/// of the price-slope matrix and `b` the price offset, one entry per slot.
struct Scenario {
  Vec a;
  Vec b;

  bool operator==(const Scenario&) const = default;
};

/// The M-multisample. Every payload shares the same dimension n and M >= 1.
/// Positivity of the slopes is a property of valid charging instances and is
/// checked where such instances are built, see `curvatures_positive()`.
class ScenarioSet {
 public:
  explicit ScenarioSet(std::vector<Scenario> scenarios);

  std::size_t size() const noexcept { return scenarios_.size(); }
  std::size_t dim() const noexcept { return scenarios_.front().a.size(); }
  const Scenario& operator[](std::size_t m) const { return scenarios_[m]; }
  const std::vector<Scenario>& scenarios() const noexcept { return scenarios_; }
  auto begin() const noexcept { return scenarios_.begin(); }
  auto end() const noexcept { return scenarios_.end(); }

  bool curvatures_positive() const;

  /// Scenarios with the given (0-based) indices, in the order given.
  ScenarioSet subset(std::span<const std::size_t> indices) const;
  ScenarioSet with_appended(Scenario extra) const;

 private:
  std::vector<Scenario> scenarios_;
};

/// Stacked agent decisions x = (x_1, ..., x_N), each block of length n.
class StrategyProfile {
 public:
  StrategyProfile(std::size_t agents, std::size_t dim, double fill = 0.0);
  StrategyProfile(std::size_t agents, std::size_t dim, Vec flat);

  std::size_t agents() const noexcept { return agents_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return flat_.size(); }

  std::span<double> block(std::size_t i) { return {flat_.data() + i * dim_, dim_}; }
  std::span<const double> block(std::size_t i) const {
    return {flat_.data() + i * dim_, dim_};
  }
  const Vec& flat() const noexcept { return flat_; }
  Vec& flat() noexcept { return flat_; }

  /// sigma(x) = sum_i x_i.
  Vec aggregate() const;

 private:
  std::size_t agents_;
  std::size_t dim_;
  Vec flat_;
};

/// A point of the probability simplex in R^M. Construction enforces
/// y_m >= -1e-12 and |sum y - 1| <= 1e-9.
class SimplexWeights {
 public:
  static constexpr double kNegativeDust = 1e-12;
  static constexpr double kSumTolerance = 1e-9;

  explicit SimplexWeights(Vec y);
  static SimplexWeights uniform(std::size_t m);
  static SimplexWeights vertex(std::size_t m, std::size_t k);

  std::size_t size() const noexcept { return y_.size(); }
  double operator[](std::size_t m) const { return y_[m]; }
  const Vec& values() const noexcept { return y_; }

 private:
  Vec y_;
};

/// z = (x, y), the state of the augmented (N+1)-player game.
struct AugmentedPoint {
  StrategyProfile x;
  SimplexWeights y;

  /// (x, y) as one vector of length nN + M.
  Vec stacked() const;
};

/// X_i = { x in R^n : 1'x >= E, 0 <= x_j <= P }.
struct FeasibleSet {
  double demand = 0.0;     // E [kWh]
  double max_power = 1.0;  // P [kW]
  std::size_t slots = 1;   // n

  /// Throws InfeasibleSetError unless 0 <= E <= nP and P > 0.
  void validate() const;
  bool contains(std::span<const double> x, double tol) const;
};

// Small dense helpers used throughout.
double dot(std::span<const double> u, std::span<const double> v);
double norm2(std::span<const double> v);
double distance(std::span<const double> u, std::span<const double> v);
double max_abs_diff(std::span<const double> u, std::span<const double> v);
double distance(const AugmentedPoint& u, const AugmentedPoint& v);

}  // namespace scenash

#endif  // SCENASH_TYPES_HPP_
