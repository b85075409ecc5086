// Copyright 2026 The TopicForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPICFORGE_PLSA_H_
#define TOPICFORGE_PLSA_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "topicforge/corpus.h"
#include "topicforge/types.h"

namespace topicforge {

struct PlsaConfig {
  std::size_t k = 10;
  std::size_t max_iter = 200;
  // Stop once |LL_t - LL_{t-1}| / |LL_{t-1}| < tol.
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

// Asymmetric pLSA: P(d, w) = P(d) * sum_z P(z|d) P(w|z).
struct PlsaModel {
  RowMatrix p_z_given_d;  // n_docs x K
  RowMatrix p_w_given_z;  // K x n_terms
  Vector p_d;             // n_d / N, fixed from the corpus
  // trace[0] is the initial log-likelihood, trace[i] the value after i
  // M-steps; the last entry always belongs to the returned parameters.
  std::vector<double> loglik_trace;
  std::size_t iterations_run = 0;
  bool converged = false;

  std::size_t k() const { return static_cast<std::size_t>(p_w_given_z.rows()); }
  std::size_t n_docs() const {
    return static_cast<std::size_t>(p_z_given_d.rows());
  }
  std::size_t n_terms() const {
    return static_cast<std::size_t>(p_w_given_z.cols());
  }
};

// EM fit on raw counts. Throws kNotRawCount for weighted input, kInvalidK
// unless 1 <= k <= n_terms, kInvalidArgument for an empty matrix or a bad
// max_iter / tol.
PlsaModel fit_plsa(const DocTermMatrix& m, const PlsaConfig& cfg);

// P(d) * sum_z P(z|d) P(w|z). Throws kIndexOutOfRange.
double plsa_joint(const PlsaModel& model, std::size_t d, std::size_t w);

// sum_{d,w} n(d,w) log P(d, w) for the given counts.
double plsa_loglik(const PlsaModel& model, const DocTermMatrix& m);

}  // namespace topicforge

#endif  // TOPICFORGE_PLSA_H_
