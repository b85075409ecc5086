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

#ifndef TOPICFORGE_LSA_H_
#define TOPICFORGE_LSA_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "topicforge/corpus.h"
#include "topicforge/types.h"

namespace topicforge {

struct LsaOptions {
  // Matrices whose smaller dimension is at most this are decomposed
  // exactly; larger ones go through the randomized range finder.
  std::size_t dense_limit = 1500;
  std::size_t oversample = 10;
  std::size_t power_iters = 4;
};

struct LsaModel {
  RowMatrix doc_factors;   // n_docs x K, U * Sigma
  RowMatrix term_factors;  // K x n_terms, rows of V^T
  Vector singular_values;  // non-increasing
  double total_variance = 0.0;  // squared Frobenius norm of the input

  std::size_t k() const {
    return static_cast<std::size_t>(singular_values.size());
  }
};

// Rank-k truncated SVD. Each term_factors row has its largest-magnitude
// entry (first one on ties) non-negative. Components beyond the numerical
// rank get a zero singular value and zero factor rows. Throws kInvalidK
// unless 1 <= k <= min(n_docs, n_terms).
LsaModel fit_lsa(const DocTermMatrix& m, std::size_t k,
                 const LsaOptions& options = {});

// sigma_i^2 / total_variance per component.
std::vector<double> explained_variance(const LsaModel& model);

// (k, sum_{i<=k} sigma_i^2 / total_variance) for k = 1..K of a fitted model.
std::vector<std::pair<std::size_t, double>> variance_curve(
    const LsaModel& model);

// One truncated SVD at k_max, then the cumulative curve.
std::vector<std::pair<std::size_t, double>> lsa_variance_curve(
    const DocTermMatrix& m, std::size_t k_max);

// || m - doc_factors * term_factors ||_F.
double lsa_residual(const LsaModel& model);

}  // namespace topicforge

#endif  // TOPICFORGE_LSA_H_
