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

#ifndef TOPICFORGE_SVD_H_
#define TOPICFORGE_SVD_H_

#include <cstddef>
#include <cstdint>

#include "topicforge/corpus.h"
#include "topicforge/types.h"

namespace topicforge {

// Thin SVD a = u * diag(s) * v^T with s non-increasing.
struct SvdResult {
  Eigen::MatrixXd u;  // m x r
  Vector s;           // r
  Eigen::MatrixXd v;  // n x r
};

// One-sided (Hestenes) Jacobi SVD of a dense matrix, r = min(m, n).
// Column pairs are rotated until every pair is orthogonal to working
// precision; singular values are the final column norms.
SvdResult jacobi_svd(const Eigen::MatrixXd& a);

// Randomized range finder (Halko, Martinsson & Tropp) on the sparse matrix
// followed by jacobi_svd of the small projected matrix. Returns
// r = min(k + oversample, min(m, n)) components; callers keep the first k.
SvdResult randomized_svd(const DocTermMatrix& m, std::size_t k,
                         std::size_t oversample, std::size_t power_iters,
                         std::uint64_t seed);

}  // namespace topicforge

#endif  // TOPICFORGE_SVD_H_
