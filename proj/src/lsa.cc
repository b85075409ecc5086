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

#include "topicforge/lsa.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "topicforge/error.h"
#include "topicforge/svd.h"

namespace topicforge {
namespace {

constexpr std::uint64_t kRangeFinderSeed = 0x5EED15A;

}  // namespace

LsaModel fit_lsa(const DocTermMatrix& m, std::size_t k,
                 const LsaOptions& options) {
  const std::size_t min_dim = std::min(m.n_docs(), m.n_terms());
  if (k < 1 || k > min_dim) {
    throw Error(ErrorCode::kInvalidK,
                "k=" + std::to_string(k) + " must lie in [1, " +
                    std::to_string(min_dim) + "]");
  }

  SvdResult svd;
  if (min_dim <= options.dense_limit || k + options.oversample >= min_dim) {
    svd = jacobi_svd(m.to_dense());
  } else {
    svd = randomized_svd(m, k, options.oversample, options.power_iters,
                         kRangeFinderSeed);
  }

  const auto kk = static_cast<Eigen::Index>(k);
  const double largest = svd.s.size() > 0 ? svd.s[0] : 0.0;
  const double rank_tol = largest *
                          static_cast<double>(std::max(m.n_docs(), m.n_terms())) *
                          std::numeric_limits<double>::epsilon();

  LsaModel model;
  model.total_variance = m.frobenius_norm_squared();
  model.singular_values = Vector::Zero(kk);
  model.doc_factors = RowMatrix::Zero(static_cast<Eigen::Index>(m.n_docs()), kk);
  model.term_factors =
      RowMatrix::Zero(kk, static_cast<Eigen::Index>(m.n_terms()));
  for (Eigen::Index i = 0; i < kk; ++i) {
    const double sigma = svd.s[i];
    if (!(sigma > rank_tol)) continue;
    Vector loadings = svd.v.col(i);
    Vector scores = svd.u.col(i) * sigma;
    Eigen::Index peak = 0;
    for (Eigen::Index j = 1; j < loadings.size(); ++j) {
      if (std::abs(loadings[j]) > std::abs(loadings[peak])) peak = j;
    }
    if (loadings[peak] < 0.0) {
      loadings = -loadings;
      scores = -scores;
    }
    model.singular_values[i] = sigma;
    model.term_factors.row(i) = loadings.transpose();
    model.doc_factors.col(i) = scores;
  }
  return model;
}

std::vector<double> explained_variance(const LsaModel& model) {
  std::vector<double> fractions;
  fractions.reserve(model.k());
  for (Eigen::Index i = 0; i < model.singular_values.size(); ++i) {
    const double sigma = model.singular_values[i];
    fractions.push_back(model.total_variance > 0.0
                            ? sigma * sigma / model.total_variance
                            : 0.0);
  }
  return fractions;
}

std::vector<std::pair<std::size_t, double>> variance_curve(
    const LsaModel& model) {
  std::vector<std::pair<std::size_t, double>> curve;
  double cumulative = 0.0;
  const std::vector<double> fractions = explained_variance(model);
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    cumulative += fractions[i];
    curve.emplace_back(i + 1, cumulative);
  }
  return curve;
}

std::vector<std::pair<std::size_t, double>> lsa_variance_curve(
    const DocTermMatrix& m, std::size_t k_max) {
  return variance_curve(fit_lsa(m, k_max));
}

double lsa_residual(const LsaModel& model) {
  double captured = 0.0;
  for (Eigen::Index i = 0; i < model.singular_values.size(); ++i) {
    captured += model.singular_values[i] * model.singular_values[i];
  }
  return std::sqrt(std::max(model.total_variance - captured, 0.0));
}

}  // namespace topicforge
