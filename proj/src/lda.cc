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

#include "topicforge/lda.h"

#include <cmath>
#include <string>

#include "topicforge/error.h"

namespace topicforge {
namespace {

void validate(const DocTermMatrix& m, const LdaConfig& cfg) {
  if (m.weighting() != Weighting::kRawCount) {
    throw Error(ErrorCode::kNotRawCount,
                "LDA needs raw counts, got a TfIdf matrix");
  }
  if (cfg.k < 1) throw Error(ErrorCode::kInvalidK, "k must be >= 1");
  if (m.nnz() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "LDA needs a non-empty matrix");
  }
  if (!(cfg.resolved_alpha() > 0.0) || !(cfg.beta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and beta must be > 0");
  }
  if (cfg.iterations < 1 || cfg.burn_in >= cfg.iterations) {
    throw Error(ErrorCode::kInvalidArgument,
                "LDA needs iterations >= 1 and burn_in < iterations");
  }
  if (cfg.sample_lag < 1 || cfg.loglik_every < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample_lag and loglik_every must be >= 1");
  }
}

std::vector<std::uint32_t> random_labels(std::size_t n_tokens, std::size_t k,
                                         Rng& rng) {
  std::vector<std::uint32_t> labels(n_tokens);
  for (auto& label : labels) label = static_cast<std::uint32_t>(rng.below(k));
  return labels;
}

}  // namespace

std::size_t count_tokens(const DocTermMatrix& m) {
  return static_cast<std::size_t>(std::llround(m.total()));
}

LdaState make_lda_state(const DocTermMatrix& m, std::size_t k, double alpha,
                        double beta, std::span<const std::uint32_t> topics) {
  if (m.weighting() != Weighting::kRawCount) {
    throw Error(ErrorCode::kNotRawCount, "LDA state needs raw counts");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidK, "k must be >= 1");
  const std::size_t n_tokens = count_tokens(m);
  if (topics.size() != n_tokens) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(topics.size()) + " labels for " +
                    std::to_string(n_tokens) + " tokens");
  }

  LdaState s;
  s.n_docs = m.n_docs();
  s.n_terms = m.n_terms();
  s.n_topics = k;
  s.alpha = alpha;
  s.beta = beta;
  s.token_doc.reserve(n_tokens);
  s.token_term.reserve(n_tokens);
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto counts = m.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto repeats = static_cast<std::size_t>(counts[i]);
      for (std::size_t r = 0; r < repeats; ++r) {
        s.token_doc.push_back(static_cast<std::uint32_t>(d));
        s.token_term.push_back(static_cast<std::uint32_t>(terms[i]));
      }
    }
  }
  s.topic.assign(topics.begin(), topics.end());
  s.doc_topic.assign(s.n_docs * k, 0);
  s.topic_term.assign(k * s.n_terms, 0);
  s.topic_total.assign(k, 0);
  s.doc_total.assign(s.n_docs, 0);
  for (std::size_t i = 0; i < n_tokens; ++i) {
    const std::uint32_t z = s.topic[i];
    if (z >= k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label " + std::to_string(z) + " >= k");
    }
    ++s.doc_topic[s.token_doc[i] * k + z];
    ++s.topic_term[z * s.n_terms + s.token_term[i]];
    ++s.topic_total[z];
    ++s.doc_total[s.token_doc[i]];
  }
  return s;
}

std::vector<double> lda_conditional(const LdaState& s, std::size_t token) {
  if (token >= s.topic.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "token " + std::to_string(token) + " out of range");
  }
  const std::size_t d = s.token_doc[token];
  const std::size_t w = s.token_term[token];
  const std::size_t own = s.topic[token];
  const double v_beta = static_cast<double>(s.n_terms) * s.beta;
  std::vector<double> p(s.n_topics);
  double sum = 0.0;
  for (std::size_t k = 0; k < s.n_topics; ++k) {
    const std::int64_t self = k == own ? 1 : 0;
    p[k] = (static_cast<double>(s.n_dk(d, k) - self) + s.alpha) *
           (static_cast<double>(s.n_kw(k, w) - self) + s.beta) /
           (static_cast<double>(s.topic_total[k] - self) + v_beta);
    sum += p[k];
  }
  for (double& x : p) x /= sum;
  return p;
}

double lda_loglik(const LdaState& s) {
  const double k = static_cast<double>(s.n_topics);
  const double v = static_cast<double>(s.n_terms);
  const double lg_beta = std::lgamma(s.beta);
  const double lg_alpha = std::lgamma(s.alpha);
  double ll = 0.0;
  for (std::size_t z = 0; z < s.n_topics; ++z) {
    ll += std::lgamma(v * s.beta) -
          std::lgamma(static_cast<double>(s.topic_total[z]) + v * s.beta);
    for (std::size_t w = 0; w < s.n_terms; ++w) {
      const std::int64_t n = s.n_kw(z, w);
      if (n > 0) ll += std::lgamma(static_cast<double>(n) + s.beta) - lg_beta;
    }
  }
  for (std::size_t d = 0; d < s.n_docs; ++d) {
    ll += std::lgamma(k * s.alpha) -
          std::lgamma(static_cast<double>(s.doc_total[d]) + k * s.alpha);
    for (std::size_t z = 0; z < s.n_topics; ++z) {
      const std::int64_t n = s.n_dk(d, z);
      if (n > 0) ll += std::lgamma(static_cast<double>(n) + s.alpha) - lg_alpha;
    }
  }
  return ll;
}

bool lda_counts_consistent(const LdaState& s) {
  std::vector<std::int64_t> doc_topic(s.n_docs * s.n_topics, 0);
  std::vector<std::int64_t> topic_term(s.n_topics * s.n_terms, 0);
  std::vector<std::int64_t> topic_total(s.n_topics, 0);
  std::vector<std::int64_t> doc_total(s.n_docs, 0);
  for (std::size_t i = 0; i < s.topic.size(); ++i) {
    const std::size_t z = s.topic[i];
    if (z >= s.n_topics) return false;
    ++doc_topic[s.token_doc[i] * s.n_topics + z];
    ++topic_term[z * s.n_terms + s.token_term[i]];
    ++topic_total[z];
    ++doc_total[s.token_doc[i]];
  }
  return doc_topic == s.doc_topic && topic_term == s.topic_term &&
         topic_total == s.topic_total && doc_total == s.doc_total;
}

RowMatrix lda_phi(const LdaState& s) {
  const auto k = static_cast<Eigen::Index>(s.n_topics);
  const auto v = static_cast<Eigen::Index>(s.n_terms);
  const double v_beta = static_cast<double>(s.n_terms) * s.beta;
  RowMatrix phi(k, v);
  for (Eigen::Index z = 0; z < k; ++z) {
    const double denom =
        static_cast<double>(s.topic_total[static_cast<std::size_t>(z)]) + v_beta;
    for (Eigen::Index w = 0; w < v; ++w) {
      phi(z, w) = (static_cast<double>(s.n_kw(static_cast<std::size_t>(z),
                                              static_cast<std::size_t>(w))) +
                   s.beta) /
                  denom;
    }
  }
  return phi;
}

RowMatrix lda_theta(const LdaState& s) {
  const auto n = static_cast<Eigen::Index>(s.n_docs);
  const auto k = static_cast<Eigen::Index>(s.n_topics);
  const double k_alpha = static_cast<double>(s.n_topics) * s.alpha;
  RowMatrix theta(n, k);
  for (Eigen::Index d = 0; d < n; ++d) {
    const double denom =
        static_cast<double>(s.doc_total[static_cast<std::size_t>(d)]) + k_alpha;
    for (Eigen::Index z = 0; z < k; ++z) {
      theta(d, z) = (static_cast<double>(s.n_dk(static_cast<std::size_t>(d),
                                                static_cast<std::size_t>(z))) +
                     s.alpha) /
                    denom;
    }
  }
  return theta;
}

GibbsSampler::GibbsSampler(const DocTermMatrix& m, const LdaConfig& cfg)
    : rng_(cfg.seed) {
  std::vector<std::uint32_t> labels =
      random_labels(count_tokens(m), cfg.k, rng_);
  state_ = make_lda_state(m, cfg.k, cfg.resolved_alpha(), cfg.beta, labels);
  cumulative_.resize(cfg.k);
}

GibbsSampler::GibbsSampler(LdaState state, std::uint64_t seed)
    : state_(std::move(state)), rng_(seed) {
  cumulative_.resize(state_.n_topics);
}

void GibbsSampler::sweep() {
  LdaState& s = state_;
  const std::size_t k = s.n_topics;
  const double v_beta = static_cast<double>(s.n_terms) * s.beta;
  for (std::size_t i = 0; i < s.topic.size(); ++i) {
    const std::size_t d = s.token_doc[i];
    const std::size_t w = s.token_term[i];
    std::int64_t* dk = &s.doc_topic[d * k];
    const std::size_t old = s.topic[i];
    --dk[old];
    --s.topic_term[old * s.n_terms + w];
    --s.topic_total[old];

    double sum = 0.0;
    for (std::size_t z = 0; z < k; ++z) {
      sum += (static_cast<double>(dk[z]) + s.alpha) *
             (static_cast<double>(s.topic_term[z * s.n_terms + w]) + s.beta) /
             (static_cast<double>(s.topic_total[z]) + v_beta);
      cumulative_[z] = sum;
    }
    const double u = rng_.uniform() * sum;
    std::size_t chosen = k - 1;
    for (std::size_t z = 0; z < k; ++z) {
      if (u < cumulative_[z]) {
        chosen = z;
        break;
      }
    }

    s.topic[i] = static_cast<std::uint32_t>(chosen);
    ++dk[chosen];
    ++s.topic_term[chosen * s.n_terms + w];
    ++s.topic_total[chosen];
  }
}

LdaModel fit_lda(const DocTermMatrix& m, const LdaConfig& cfg) {
  validate(m, cfg);
  GibbsSampler sampler(m, cfg);

  LdaModel model;
  model.alpha = cfg.resolved_alpha();
  model.beta = cfg.beta;
  model.loglik_trace.push_back(lda_loglik(sampler.state()));

  RowMatrix phi_sum = RowMatrix::Zero(static_cast<Eigen::Index>(cfg.k),
                                      static_cast<Eigen::Index>(m.n_terms()));
  RowMatrix theta_sum = RowMatrix::Zero(static_cast<Eigen::Index>(m.n_docs()),
                                        static_cast<Eigen::Index>(cfg.k));
  std::size_t samples = 0;
  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    sampler.sweep();
    if (cfg.on_sweep) cfg.on_sweep(it, sampler.state());
    if (it % cfg.loglik_every == 0 || it == cfg.iterations) {
      model.loglik_trace.push_back(lda_loglik(sampler.state()));
    }
    if (it > cfg.burn_in && (it - cfg.burn_in) % cfg.sample_lag == 0) {
      phi_sum += lda_phi(sampler.state());
      theta_sum += lda_theta(sampler.state());
      ++samples;
    }
  }

  if (samples == 0) {
    model.phi = lda_phi(sampler.state());
    model.theta = lda_theta(sampler.state());
  } else {
    model.phi = phi_sum / static_cast<double>(samples);
    model.theta = theta_sum / static_cast<double>(samples);
  }
  // Renormalize to remove rounding drift from the averaging.
  for (Eigen::Index r = 0; r < model.phi.rows(); ++r) {
    model.phi.row(r) /= model.phi.row(r).sum();
  }
  for (Eigen::Index r = 0; r < model.theta.rows(); ++r) {
    model.theta.row(r) /= model.theta.row(r).sum();
  }
  model.assignments = sampler.state().topic;
  return model;
}

}  // namespace topicforge
