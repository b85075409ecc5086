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

#ifndef TOPICFORGE_LDA_H_
#define TOPICFORGE_LDA_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "topicforge/corpus.h"
#include "topicforge/random.h"
#include "topicforge/types.h"

namespace topicforge {

struct LdaState;

struct LdaConfig {
  std::size_t k = 10;
  // Symmetric Dirichlet prior on theta; 50 / k when unset.
  std::optional<double> alpha;
  double beta = 0.01;
  std::size_t iterations = 1000;
  std::size_t burn_in = 200;
  // After burn-in, phi and theta point estimates are averaged every
  // sample_lag sweeps.
  std::size_t sample_lag = 10;
  // Joint log-likelihood is recorded every loglik_every sweeps (plus the
  // initial and the final state).
  std::size_t loglik_every = 10;
  std::uint64_t seed = 0;
  // Called after every sweep with the 1-based sweep number.
  std::function<void(std::size_t, const LdaState&)> on_sweep;

  double resolved_alpha() const {
    return alpha.value_or(50.0 / static_cast<double>(k));
  }
};

// Token-level sampler state: one topic label per token instance and the
// count tables derived from them.
struct LdaState {
  std::size_t n_docs = 0;
  std::size_t n_terms = 0;
  std::size_t n_topics = 0;
  double alpha = 0.0;
  double beta = 0.0;

  // Tokens are laid out document by document, terms ascending, one entry
  // per occurrence.
  std::vector<std::uint32_t> token_doc;
  std::vector<std::uint32_t> token_term;
  std::vector<std::uint32_t> topic;

  std::vector<std::int64_t> doc_topic;    // n_docs x K
  std::vector<std::int64_t> topic_term;   // K x n_terms
  std::vector<std::int64_t> topic_total;  // K
  std::vector<std::int64_t> doc_total;    // n_docs

  std::int64_t n_dk(std::size_t d, std::size_t k) const {
    return doc_topic[d * n_topics + k];
  }
  std::int64_t n_kw(std::size_t k, std::size_t w) const {
    return topic_term[k * n_terms + w];
  }
};

// Builds the state for a given labelling (topics.size() must equal the
// token count of m, every label < k).
LdaState make_lda_state(const DocTermMatrix& m, std::size_t k, double alpha,
                        double beta, std::span<const std::uint32_t> topics);

std::size_t count_tokens(const DocTermMatrix& m);

// Normalized P(z_i = k | z_-i, w) for one token, the token itself removed
// from the counts:
//   (n_dk + alpha) (n_kw + beta) / (n_k + V beta).
std::vector<double> lda_conditional(const LdaState& state, std::size_t token);

// log p(w, z | alpha, beta) of the collapsed model.
double lda_loglik(const LdaState& state);

// Recounts every table from the labels and compares exactly.
bool lda_counts_consistent(const LdaState& state);

// Point estimates (n_kw + beta) / (n_k + V beta) and
// (n_dk + alpha) / (n_d + K alpha).
RowMatrix lda_phi(const LdaState& state);
RowMatrix lda_theta(const LdaState& state);

class GibbsSampler {
 public:
  // Random initial labels drawn from cfg.seed.
  GibbsSampler(const DocTermMatrix& m, const LdaConfig& cfg);
  GibbsSampler(LdaState state, std::uint64_t seed);

  // One pass over every token in layout order.
  void sweep();
  const LdaState& state() const { return state_; }

 private:
  LdaState state_;
  Rng rng_;
  std::vector<double> cumulative_;
};

struct LdaModel {
  RowMatrix phi;    // K x n_terms
  RowMatrix theta;  // n_docs x K
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<std::uint32_t> assignments;
  std::vector<double> loglik_trace;

  std::size_t k() const { return static_cast<std::size_t>(phi.rows()); }
};

// Throws kNotRawCount for weighted input, kInvalidK for k < 1, and
// kInvalidArgument for an empty matrix or inconsistent settings.
LdaModel fit_lda(const DocTermMatrix& m, const LdaConfig& cfg);

}  // namespace topicforge

#endif  // TOPICFORGE_LDA_H_
