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

#include "topicforge/nmf.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "topicforge/error.h"
#include "topicforge/random.h"

namespace topicforge {
namespace {

constexpr double kEpsilon = 1e-12;
// Up to this many dense entries the objective is summed entry by entry;
// above it the expanded form ||V||^2 - 2<V, WH> + <W^T W, H H^T> is used.
constexpr double kDenseObjectiveLimit = 4e6;

// (W^T V) as K x n_docs.
RowMatrix wt_v(const DocTermMatrix& m, const RowMatrix& w) {
  RowMatrix out = RowMatrix::Zero(w.cols(), static_cast<Eigen::Index>(m.n_docs()));
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto weights = m.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out.col(static_cast<Eigen::Index>(d)) +=
          weights[i] * w.row(static_cast<Eigen::Index>(terms[i])).transpose();
    }
  }
  return out;
}

// (V H^T) as n_terms x K.
RowMatrix v_ht(const DocTermMatrix& m, const RowMatrix& h) {
  RowMatrix out = RowMatrix::Zero(static_cast<Eigen::Index>(m.n_terms()), h.rows());
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto weights = m.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out.row(static_cast<Eigen::Index>(terms[i])) +=
          weights[i] * h.col(static_cast<Eigen::Index>(d)).transpose();
    }
  }
  return out;
}

}  // namespace

double nmf_objective(const DocTermMatrix& m, const RowMatrix& w,
                     const RowMatrix& h) {
  const double dense_entries =
      static_cast<double>(m.n_terms()) * static_cast<double>(m.n_docs());
  if (dense_entries <= kDenseObjectiveLimit) {
    Eigen::MatrixXd residual = w * h;
    for (std::size_t d = 0; d < m.n_docs(); ++d) {
      const auto terms = m.row_terms(d);
      const auto weights = m.row_weights(d);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        residual(static_cast<Eigen::Index>(terms[i]),
                 static_cast<Eigen::Index>(d)) -= weights[i];
      }
    }
    return residual.norm();
  }
  double cross = 0.0;
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto weights = m.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      cross += weights[i] * w.row(static_cast<Eigen::Index>(terms[i]))
                                .dot(h.col(static_cast<Eigen::Index>(d)));
    }
  }
  const Eigen::MatrixXd wtw = w.transpose() * w;
  const Eigen::MatrixXd hht = h * h.transpose();
  const double squared =
      m.frobenius_norm_squared() - 2.0 * cross + wtw.cwiseProduct(hht).sum();
  return std::sqrt(std::max(squared, 0.0));
}

NmfModel fit_nmf(const DocTermMatrix& m, const NmfConfig& cfg) {
  const std::size_t min_dim = std::min(m.n_terms(), m.n_docs());
  if (cfg.k < 1 || cfg.k > min_dim) {
    throw Error(ErrorCode::kInvalidK,
                "k=" + std::to_string(cfg.k) + " must lie in [1, " +
                    std::to_string(min_dim) + "]");
  }
  if (cfg.max_iter < 1 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "NMF needs max_iter >= 1 and tol > 0");
  }

  const auto k = static_cast<Eigen::Index>(cfg.k);
  Rng rng(cfg.seed);
  NmfModel model;
  model.w_factor.resize(static_cast<Eigen::Index>(m.n_terms()), k);
  model.h_factor.resize(k, static_cast<Eigen::Index>(m.n_docs()));
  for (Eigen::Index i = 0; i < model.w_factor.size(); ++i) {
    model.w_factor.data()[i] = rng.uniform_positive();
  }
  for (Eigen::Index i = 0; i < model.h_factor.size(); ++i) {
    model.h_factor.data()[i] = rng.uniform_positive();
  }

  RowMatrix& w = model.w_factor;
  RowMatrix& h = model.h_factor;
  model.objective_trace.push_back(nmf_objective(m, w, h));
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    const RowMatrix h_num = wt_v(m, w);
    const RowMatrix h_den = (w.transpose() * w) * h;
    h = (h.array() * h_num.array() / (h_den.array() + kEpsilon)).matrix();

    const RowMatrix w_num = v_ht(m, h);
    const RowMatrix w_den = w * (h * h.transpose());
    w = (w.array() * w_num.array() / (w_den.array() + kEpsilon)).matrix();

    ++model.iterations_run;
    const double previous = model.objective_trace.back();
    const double current = nmf_objective(m, w, h);
    model.objective_trace.push_back(current);
    if (cfg.on_iteration) cfg.on_iteration(it, w, h);
    if (std::abs(previous - current) < cfg.tol * previous) {
      model.converged = true;
      break;
    }
  }
  return model;
}

RowMatrix nmf_doc_topics(const NmfModel& model) {
  RowMatrix out = model.h_factor.transpose();
  const double uniform = 1.0 / static_cast<double>(out.cols());
  for (Eigen::Index d = 0; d < out.rows(); ++d) {
    const double sum = out.row(d).sum();
    if (sum > 0.0) {
      out.row(d) /= sum;
    } else {
      out.row(d).setConstant(uniform);
    }
  }
  return out;
}

RowMatrix nmf_topic_terms(const NmfModel& model) {
  RowMatrix out = model.w_factor.transpose();
  const double uniform = 1.0 / static_cast<double>(out.cols());
  for (Eigen::Index z = 0; z < out.rows(); ++z) {
    const double sum = out.row(z).sum();
    if (sum > 0.0) {
      out.row(z) /= sum;
    } else {
      out.row(z).setConstant(uniform);
    }
  }
  return out;
}

}  // namespace topicforge
