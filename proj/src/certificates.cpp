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

#include "scenash/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace scenash {
namespace {

void check_common(std::size_t samples, double beta, std::size_t k, const char* who) {
  if (samples == 0) throw std::invalid_argument(std::string(who) + ": need M >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument(std::string(who) + ": need 0 < beta < 1");
  if (k > samples) throw std::invalid_argument(std::string(who) + ": need k <= M");
}

double log_sum_exp(const std::vector<double>& terms) {
  const double peak = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kSplit: return "split";
    case CertificateKind::kWaitAndJudge: return "wait_and_judge";
    case CertificateKind::kAPriori: return "a_priori";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(std::string_view name) {
  if (name == "split") return CertificateKind::kSplit;
  if (name == "wait_and_judge") return CertificateKind::kWaitAndJudge;
  if (name == "a_priori") return CertificateKind::kAPriori;
  throw std::invalid_argument("unknown certificate kind: " + std::string(name));
}

double log_binomial(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("log_binomial: k > n");
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double eps_split(std::size_t samples, double beta, std::size_t k) {
  check_common(samples, beta, k, "eps_split");
  if (k == samples) return 1.0;
  const double log_term = std::log(beta) - std::log(static_cast<double>(samples)) - log_binomial(samples, k);
  // 1 - exp(x) loses digits when x is close to zero.
  return -std::expm1(log_term / static_cast<double>(samples - k));
}

double wait_judge_polynomial(std::size_t samples, double beta, std::size_t k, double t) {
  check_common(samples, beta, k, "wait_judge_polynomial");
  const std::size_t span = samples - k;
  const double log_top = log_binomial(samples, k);
  double sum = 0.0;
  if (t == 0.0) {
    sum = std::exp(-log_top);  // only the m = k term survives
  } else {
    const double log_t = std::log(t);
    for (std::size_t m = k; m <= samples; ++m)
      sum += std::exp(log_binomial(m, k) - log_top + static_cast<double>(m - k) * log_t);
  }
  const double trailing = span == 0 ? 1.0 : std::pow(t, static_cast<double>(span));
  return beta / static_cast<double>(samples + 1) * sum - trailing;
}

double eps_wait_judge(std::size_t samples, double beta, std::size_t k) {
  check_common(samples, beta, k, "eps_wait_judge");
  if (k == samples) return 1.0;
  double lo = 0.0, hi = 1.0;
  if (!(wait_judge_polynomial(samples, beta, k, lo) > 0.0) ||
      !(wait_judge_polynomial(samples, beta, k, hi) < 0.0))
    throw std::runtime_error("eps_wait_judge: root is not bracketed by (0, 1)");
  // Bisect until the midpoint is no longer representable between the ends.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (wait_judge_polynomial(samples, beta, k, mid) > 0.0 ? lo : hi) = mid;
  }
  return 1.0 - 0.5 * (lo + hi);
}

Certificate a_posteriori(std::size_t samples, double beta, std::size_t k, CertificateKind kind) {
  Certificate cert{samples, beta, k, 1.0, kind, false};
  switch (kind) {
    case CertificateKind::kSplit: cert.epsilon = eps_split(samples, beta, k); break;
    case CertificateKind::kWaitAndJudge: cert.epsilon = eps_wait_judge(samples, beta, k); break;
    case CertificateKind::kAPriori:
      throw std::invalid_argument("a_posteriori: use eps_a_priori for the a priori bound");
  }
  return cert;
}

Certificate eps_a_priori(std::size_t agents, std::size_t dim, std::size_t samples, double beta,
                         bool separable_convexity, bool nondegenerate) {
  if (agents == 0 || dim == 0) throw std::invalid_argument("eps_a_priori: need N, n >= 1");
  if (samples == 0) throw std::invalid_argument("eps_a_priori: need M >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("eps_a_priori: need 0 < beta < 1");
  const std::size_t k = separable_convexity ? dim * agents + 1 : (dim + 1) * agents;
  Certificate cert{samples, beta, k, 1.0, CertificateKind::kAPriori, false};
  if (k >= samples) {
    cert.vacuous = true;
    return cert;
  }
  cert.epsilon = nondegenerate ? eps_wait_judge(samples, beta, k) : eps_split(samples, beta, k);
  return cert;
}

double verify_split_identity(std::size_t samples, double beta) {
  check_common(samples, beta, 0, "verify_split_identity");
  if (samples > 2000) throw std::invalid_argument("verify_split_identity: M <= 2000");
  std::vector<double> terms;
  terms.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double eps = eps_split(samples, beta, k);
    terms.push_back(log_binomial(samples, k) + static_cast<double>(samples - k) * std::log1p(-eps));
  }
  return std::abs(std::exp(log_sum_exp(terms)) - beta) / beta;
}

}  // namespace scenash
