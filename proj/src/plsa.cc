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

#include "topicforge/plsa.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "topicforge/error.h"
#include "topicforge/random.h"

namespace topicforge {
namespace {

constexpr double kProbFloor = 1e-300;

void fill_random_simplex_rows(RowMatrix& m, Rng& rng) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.uniform_positive();
    m.row(r) /= m.row(r).sum();
  }
}

// Normalizes each row to sum one; rows without mass become uniform.
void normalize_rows(RowMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double sum = m.row(r).sum();
    if (sum > 0.0) {
      m.row(r) /= sum;
    } else {
      m.row(r).setConstant(1.0 / static_cast<double>(m.cols()));
    }
  }
}

// One pass over the nonzeros. Returns the log-likelihood of the current
// parameters and accumulates the expected counts n(d,w) P(z|d,w) into
// doc_stats (n_docs x K) and term_stats (K x n_terms). The posterior for an
// entry is formed on the fly and never stored.
double accumulate(const DocTermMatrix& m, const PlsaModel& model,
                  RowMatrix* doc_stats, RowMatrix* term_stats) {
  const Eigen::Index k = model.p_w_given_z.rows();
  Vector joint(k);
  double loglik = 0.0;
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto counts = m.row_weights(d);
    const auto di = static_cast<Eigen::Index>(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto w = static_cast<Eigen::Index>(terms[i]);
      for (Eigen::Index z = 0; z < k; ++z) {
        joint[z] = model.p_z_given_d(di, z) * model.p_w_given_z(z, w);
      }
      const double mix = joint.sum();
      loglik += counts[i] * std::log(std::max(model.p_d[di] * mix, kProbFloor));
      if (doc_stats == nullptr || !(mix > 0.0)) continue;
      for (Eigen::Index z = 0; z < k; ++z) {
        const double expected = counts[i] * (joint[z] / mix);
        (*doc_stats)(di, z) += expected;
        (*term_stats)(z, w) += expected;
      }
    }
  }
  return loglik;
}

}  // namespace

PlsaModel fit_plsa(const DocTermMatrix& m, const PlsaConfig& cfg) {
  if (m.weighting() != Weighting::kRawCount) {
    throw Error(ErrorCode::kNotRawCount,
                "pLSA needs raw counts, got a TfIdf matrix");
  }
  if (cfg.k < 1 || cfg.k > m.n_terms()) {
    throw Error(ErrorCode::kInvalidK,
                "k=" + std::to_string(cfg.k) + " must lie in [1, " +
                    std::to_string(m.n_terms()) + "]");
  }
  if (m.nnz() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "pLSA needs a non-empty matrix");
  }
  if (cfg.max_iter < 1 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pLSA needs max_iter >= 1 and tol > 0");
  }

  const auto n_docs = static_cast<Eigen::Index>(m.n_docs());
  const auto n_terms = static_cast<Eigen::Index>(m.n_terms());
  const auto k = static_cast<Eigen::Index>(cfg.k);

  PlsaModel model;
  const double total = m.total();
  model.p_d.resize(n_docs);
  for (Eigen::Index d = 0; d < n_docs; ++d) {
    model.p_d[d] = m.row_sum(static_cast<std::size_t>(d)) / total;
  }

  Rng rng(cfg.seed);
  model.p_z_given_d.resize(n_docs, k);
  model.p_w_given_z.resize(k, n_terms);
  // P(z|d) starts uniform so that the run does not depend on document order;
  // the seeded P(w|z) breaks the topic symmetry.
  model.p_z_given_d.setConstant(1.0 / static_cast<double>(k));
  fill_random_simplex_rows(model.p_w_given_z, rng);

  RowMatrix doc_stats(n_docs, k);
  RowMatrix term_stats(k, n_terms);
  for (std::size_t it = 0; it < cfg.max_iter; ++it) {
    doc_stats.setZero();
    term_stats.setZero();
    const double loglik = accumulate(m, model, &doc_stats, &term_stats);
    if (!model.loglik_trace.empty()) {
      const double previous = model.loglik_trace.back();
      if (std::abs(loglik - previous) < cfg.tol * std::abs(previous)) {
        model.loglik_trace.push_back(loglik);
        model.converged = true;
        return model;
      }
    }
    model.loglik_trace.push_back(loglik);
    normalize_rows(doc_stats);
    normalize_rows(term_stats);
    model.p_z_given_d.swap(doc_stats);
    model.p_w_given_z.swap(term_stats);
    ++model.iterations_run;
  }
  model.loglik_trace.push_back(accumulate(m, model, nullptr, nullptr));
  return model;
}

double plsa_joint(const PlsaModel& model, std::size_t d, std::size_t w) {
  if (d >= model.n_docs() || w >= model.n_terms()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "(" + std::to_string(d) + ", " + std::to_string(w) +
                    ") outside a " + std::to_string(model.n_docs()) + " x " +
                    std::to_string(model.n_terms()) + " model");
  }
  const auto di = static_cast<Eigen::Index>(d);
  const auto wi = static_cast<Eigen::Index>(w);
  return model.p_d[di] *
         model.p_z_given_d.row(di).dot(model.p_w_given_z.col(wi));
}

double plsa_loglik(const PlsaModel& model, const DocTermMatrix& m) {
  if (m.n_docs() != model.n_docs() || m.n_terms() != model.n_terms()) {
    throw Error(ErrorCode::kLengthMismatch,
                "matrix shape does not match the pLSA model");
  }
  return accumulate(m, model, nullptr, nullptr);
}

}  // namespace topicforge
