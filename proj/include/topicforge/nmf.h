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

#ifndef TOPICFORGE_NMF_H_
#define TOPICFORGE_NMF_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "topicforge/corpus.h"
#include "topicforge/types.h"

namespace topicforge {

struct NmfConfig {
  std::size_t k = 10;
  std::size_t max_iter = 200;
  // Stop once |f_t - f_{t-1}| / f_{t-1} < tol, f = ||V - WH||_F.
  double tol = 1e-6;
  std::uint64_t seed = 0;
  // Called after every full (H, W) update cycle with the iteration number
  // (1-based) and the current factors.
  std::function<void(std::size_t, const RowMatrix&, const RowMatrix&)>
      on_iteration;
};

// V ~ W H with V = m^T (terms x docs).
struct NmfModel {
  RowMatrix w_factor;  // n_terms x K
  RowMatrix h_factor;  // K x n_docs
  // trace[0] is the objective at initialization, trace[i] after i cycles.
  std::vector<double> objective_trace;
  std::size_t iterations_run = 0;
  bool converged = false;

  std::size_t k() const { return static_cast<std::size_t>(h_factor.rows()); }
};

// Lee-Seung multiplicative updates for the Frobenius objective:
//   H <- H .* (W^T V) ./ (W^T W H + eps)
//   W <- W .* (V H^T) ./ (W H H^T + eps),   eps = 1e-12.
// Throws kInvalidK unless 1 <= k <= min(n_terms, n_docs), and
// kInvalidArgument for bad max_iter / tol.
NmfModel fit_nmf(const DocTermMatrix& m, const NmfConfig& cfg);

// ||m^T - w * h||_F.
double nmf_objective(const DocTermMatrix& m, const RowMatrix& w,
                     const RowMatrix& h);

// H^T with each document row L1-normalized; all-zero columns become 1/K.
RowMatrix nmf_doc_topics(const NmfModel& model);

// W with each topic column L1-normalized, transposed to K x n_terms.
RowMatrix nmf_topic_terms(const NmfModel& model);

}  // namespace topicforge

#endif  // TOPICFORGE_NMF_H_
