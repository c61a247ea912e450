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

// Brute-force reference computations for the unit tests. Nothing here calls
// into the library's solvers or projections.

#ifndef SCENASH_TESTS_ORACLES_HPP_
#define SCENASH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline double sq_dist(const Vec& u, const Vec& v) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
  return s;
}

// Projection onto the simplex by enumerating all 2^M - 1 supports.
inline Vec simplex_projection(const Vec& v) {
  const std::size_t m = v.size();
  Vec best;
  double best_d = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) sum += v[j], ++count;
    const double shift = (sum - 1.0) / static_cast<double>(count);
    Vec y(m, 0.0);
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) {
        y[j] = v[j] - shift;
        if (y[j] < 0.0) ok = false;
      }
    if (!ok) continue;
    const double d = sq_dist(y, v);
    if (d < best_d) best_d = d, best = y;
  }
  return best;
}

// Projection onto {1'x >= E, 0 <= x <= P} by enumerating every assignment of
// coordinates to {lower, upper, free}, with and without the budget binding.
inline Vec box_budget_projection(const Vec& v, double demand, double cap) {
  const std::size_t n = v.size();
  Vec best;
  double best_d = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vec& x) {
    double sum = 0.0;
    for (double t : x) {
      if (t < -1e-12 || t > cap + 1e-12) return;
      sum += t;
    }
    if (sum < demand - 1e-10) return;
    const double d = sq_dist(x, v);
    if (d < best_d) best_d = d, best = x;
  };
  Vec clipped(n);
  for (std::size_t j = 0; j < n; ++j) clipped[j] = std::clamp(v[j], 0.0, cap);
  consider(clipped);
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> state(n);
    std::size_t c = code;
    for (std::size_t j = 0; j < n; ++j) state[j] = static_cast<int>(c % 3), c /= 3;
    double fixed = 0.0, free_sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (state[j] == 1) fixed += cap;
      if (state[j] == 2) free_sum += v[j], ++free_count;
    }
    Vec x(n, 0.0);
    if (free_count == 0) {
      if (std::abs(fixed - demand) > 1e-12) continue;
      for (std::size_t j = 0; j < n; ++j) x[j] = state[j] == 1 ? cap : 0.0;
    } else {
      const double shift = (demand - fixed - free_sum) / static_cast<double>(free_count);
      if (shift < 0.0) continue;  // multiplier must be nonnegative
      for (std::size_t j = 0; j < n; ++j)
        x[j] = state[j] == 0 ? 0.0 : state[j] == 1 ? cap : v[j] + shift;
    }
    consider(x);
  }
  return best;
}

// Central difference of f along coordinate k.
inline double central_difference(const std::function<double(const Vec&)>& f, Vec x, std::size_t k,
                                 double h) {
  const double x0 = x[k];
  x[k] = x0 + h;
  const double up = f(x);
  x[k] = x0 - h;
  const double down = f(x);
  return (up - down) / (2.0 * h);
}

// Minimiser of a strictly convex scalar function on [lo, hi] by golden
// section search.
inline double golden_section(const std::function<double(double)>& f, double lo, double hi,
                             int iterations = 200) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - r * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + r * (b - a), fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace oracle

#endif  // SCENASH_TESTS_ORACLES_HPP_
