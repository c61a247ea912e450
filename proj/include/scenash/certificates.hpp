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

// PAC violation bounds as functions of the compression-set cardinality k.
//
// With probability at least 1 - beta over the M-multisample, the probability
// that a fresh scenario changes the equilibrium is at most epsilon(k), where
// k is the size of any compression set. Two choices of epsilon are provided:
// an even split of beta across the M terms of the defining identity, and the
// tighter wait-and-judge bound that holds when the problem is non-degenerate.
// All binomial coefficients are handled in the natural-log domain.

#ifndef SCENASH_CERTIFICATES_HPP_
#define SCENASH_CERTIFICATES_HPP_

#include <cstddef>
#include <string_view>

namespace scenash {

enum class CertificateKind { kSplit, kWaitAndJudge, kAPriori };

std::string_view to_string(CertificateKind kind);
/// Accepts "split", "wait_and_judge" and "a_priori".
CertificateKind certificate_kind_from_string(std::string_view name);

struct Certificate {
  std::size_t samples = 0;      // M
  double beta = 0.0;
  std::size_t cardinality = 0;  // k
  double epsilon = 1.0;
  CertificateKind kind = CertificateKind::kSplit;
  bool vacuous = false;         // a priori only: k >= M
};

/// ln C(n, k).
double log_binomial(std::size_t n, std::size_t k);

/// 1 - (beta / (M C(M,k)))^(1/(M-k)) for k < M, and 1 at k = M.
double eps_split(std::size_t samples, double beta, std::size_t k);

/// 1 - t, with t the root in (0,1) of
///   beta/(M+1) sum_{m=k}^{M} C(m,k) t^(m-k) - C(M,k) t^(M-k).
/// Returns 1 at k = M.
double eps_wait_judge(std::size_t samples, double beta, std::size_t k);

/// The wait-and-judge polynomial divided by C(M,k), so that the trailing
/// term is exactly t^(M-k). Positive at t = 0 and negative at t = 1.
double wait_judge_polynomial(std::size_t samples, double beta, std::size_t k, double t);

/// Bound evaluated before seeing data, at k = (n+1)N, or at k = nN+1 when f_i
/// and g are separately convex. Uses the wait-and-judge form when
/// `nondegenerate` is set. Vacuous (epsilon = 1) once k >= M.
Certificate eps_a_priori(std::size_t agents, std::size_t dim, std::size_t samples, double beta,
                         bool separable_convexity, bool nondegenerate = false);

/// Certificate for an observed cardinality k under the split or wait-and-judge
/// bound.
Certificate a_posteriori(std::size_t samples, double beta, std::size_t k, CertificateKind kind);

/// |sum_{k<M} C(M,k) (1 - eps_split(k))^(M-k) - beta| / beta, accumulated as a
/// log-sum. Requires M <= 2000.
double verify_split_identity(std::size_t samples, double beta);

}  // namespace scenash

#endif  // SCENASH_CERTIFICATES_HPP_
