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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oracles/reference_models.h"
#include "support/test_util.h"

namespace topicforge {
namespace {

using testing::from_dense;

template <typename Row>
double best_block_mass(const Row& topic, const testing::SyntheticMatrix& s) {
  double best = 0.0;
  for (const auto& block : s.corpus.blocks) {
    double mass = 0.0;
    for (const auto& term : block) {
      mass += topic[static_cast<Eigen::Index>(*s.vocab.find(term))];
    }
    best = std::max(best, mass);
  }
  return best;
}

LdaConfig short_run(std::size_t k, std::uint64_t seed) {
  LdaConfig cfg;
  cfg.k = k;
  cfg.iterations = 60;
  cfg.burn_in = 20;
  cfg.seed = seed;
  return cfg;
}

TEST(LdaTest, SingleTermVocabulary) {
  const DocTermMatrix m = from_dense({{3}, {2}, {5}});
  for (std::size_t k : {1u, 3u}) {
    const LdaModel model = fit_lda(m, short_run(k, 1));
    ASSERT_EQ(model.phi.rows(), static_cast<Eigen::Index>(k));
    for (Eigen::Index z = 0; z < model.phi.rows(); ++z) {
      EXPECT_DOUBLE_EQ(model.phi(z, 0), 1.0);
    }
  }
}

void expect_two_block_separation(const testing::SyntheticMatrix& s,
                                 const LdaConfig& cfg) {
  const LdaModel model = fit_lda(s.counts, cfg);
  for (Eigen::Index z = 0; z < 2; ++z) {
    const Vector row = model.phi.row(z);
    EXPECT_GE(best_block_mass(row, s), 0.95) << "topic " << z;
  }

  // An independently coded sampler reaches the same separation on the
  // same corpus and hyperparameters.
  const oracle::GibbsResult ref =
      oracle::lda_gibbs(testing::to_rows(s.counts), 2, cfg.resolved_alpha(),
                        cfg.beta, static_cast<int>(cfg.iterations), cfg.seed);
  for (const auto& topic : ref.phi) EXPECT_GE(best_block_mass(topic, s), 0.95);
}

TEST(LdaTest, TwoBlockCorpusSeparates) {
  LdaConfig cfg;
  cfg.k = 2;
  cfg.iterations = 500;
  cfg.burn_in = 100;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    cfg.seed = seed;
    expect_two_block_separation(testing::synthetic_matrix(2, 20, 10, 50, seed),
                                cfg);
  }
}

TEST(LdaTest, TwoBlockShortDocumentsNeedSparserPrior) {
  // With 10-token documents the default alpha = 25 swamps the evidence in
  // both samplers; a sparser prior separates the blocks.
  LdaConfig cfg;
  cfg.k = 2;
  cfg.alpha = 0.5;
  cfg.iterations = 500;
  cfg.burn_in = 100;
  cfg.seed = 3;
  expect_two_block_separation(testing::synthetic_matrix(2, 5, 3, 10, 11), cfg);
}

TEST(LdaTest, FrozenStateConditional) {
  // Tokens in order: doc0 = t0 t0 t1, doc1 = t1 t2 t2.
  const DocTermMatrix m = from_dense({{2, 1, 0}, {0, 1, 2}});
  const std::vector<std::uint32_t> labels = {0, 1, 0, 1, 1, 0};
  const LdaState state = make_lda_state(m, 2, 0.5, 0.1, labels);
  // Excluding token 0: n(d0,k0)=1, n(d0,k1)=1, n(k0,t0)=0, n(k1,t0)=1,
  // n(k0)=2, n(k1)=3, V*beta=0.3.
  //   k0: 1.5 * 0.1 / 2.3,  k1: 1.5 * 1.1 / 3.3 = 0.5
  // which normalizes to 3/26 and 23/26.
  const std::vector<double> p = lda_conditional(state, 0);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 3.0 / 26.0, 1e-12);
  EXPECT_NEAR(p[1], 23.0 / 26.0, 1e-12);
}

TEST(LdaTest, SingleTokenLogLikelihood) {
  // One doc, one token, k=1: the beta part reduces to
  // lgamma(bV) - lgamma(bV+1) + lgamma(b+1) - lgamma(b) = log(b) - log(bV)
  // and the alpha part vanishes, leaving -log V.
  const DocTermMatrix m = from_dense({{0, 1, 0}});
  const std::vector<std::uint32_t> labels = {0};
  for (double beta : {0.01, 0.5, 2.0}) {
    const LdaState state = make_lda_state(m, 1, 0.7, beta, labels);
    EXPECT_NEAR(lda_loglik(state), -std::log(3.0), 1e-12);
  }
}

TEST(LdaTest, Errors) {
  const DocTermMatrix m = testing::random_counts(4, 3, 1);
  LdaConfig cfg = short_run(0, 1);
  EXPECT_TF_ERROR(fit_lda(m, cfg), ErrorCode::kInvalidK);
  cfg.k = 2;
  EXPECT_TF_ERROR(fit_lda(tfidf(m), cfg), ErrorCode::kNotRawCount);
  cfg.burn_in = cfg.iterations;
  EXPECT_TF_ERROR(fit_lda(m, cfg), ErrorCode::kInvalidArgument);
  cfg = short_run(2, 1);
  cfg.beta = 0.0;
  EXPECT_TF_ERROR(fit_lda(m, cfg), ErrorCode::kInvalidArgument);
  const std::vector<std::uint32_t> too_few = {0};
  EXPECT_TF_ERROR(make_lda_state(m, 2, 1.0, 1.0, too_few),
                  ErrorCode::kLengthMismatch);
}

TEST(LdaPropertyTest, CountsConservedEverySweep) {
  const auto s = testing::synthetic_matrix(3, 20, 20, 50, 4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    LdaConfig cfg = short_run(3, seed);
    std::size_t sweeps = 0;
    cfg.on_sweep = [&](std::size_t, const LdaState& state) {
      ++sweeps;
      ASSERT_TRUE(lda_counts_consistent(state));
      std::int64_t total = 0;
      for (std::int64_t n : state.topic_total) total += n;
      ASSERT_EQ(total, static_cast<std::int64_t>(count_tokens(s.counts)));
      for (std::size_t d = 0; d < state.n_docs; ++d) {
        ASSERT_EQ(state.doc_total[d],
                  static_cast<std::int64_t>(std::llround(s.counts.row_sum(d))));
      }
    };
    const LdaModel model = fit_lda(s.counts, cfg);
    EXPECT_EQ(sweeps, cfg.iterations);
    for (Eigen::Index r = 0; r < model.phi.rows(); ++r) {
      EXPECT_NEAR(model.phi.row(r).sum(), 1.0, 1e-12);
      EXPECT_GT(model.phi.row(r).minCoeff(), 0.0);
    }
    for (Eigen::Index r = 0; r < model.theta.rows(); ++r) {
      EXPECT_NEAR(model.theta.row(r).sum(), 1.0, 1e-12);
      EXPECT_GT(model.theta.row(r).minCoeff(), 0.0);
    }
  }
}

TEST(LdaPropertyTest, LogLikelihoodInvariantToRelabeling) {
  const auto s = testing::synthetic_matrix(3, 10, 5, 20, 2);
  GibbsSampler sampler(s.counts, short_run(4, 9));
  for (int i = 0; i < 5; ++i) sampler.sweep();
  const LdaState& state = sampler.state();
  const std::vector<std::uint32_t> perm = {2, 0, 3, 1};
  std::vector<std::uint32_t> relabeled;
  for (std::uint32_t z : state.topic) relabeled.push_back(perm[z]);
  const LdaState other =
      make_lda_state(s.counts, 4, state.alpha, state.beta, relabeled);
  EXPECT_NEAR(lda_loglik(other), lda_loglik(state), 1e-9);
}

TEST(LdaPropertyTest, Deterministic) {
  const auto s = testing::synthetic_matrix(3, 10, 5, 20, 2);
  const LdaModel a = fit_lda(s.counts, short_run(3, 42));
  const LdaModel b = fit_lda(s.counts, short_run(3, 42));
  EXPECT_EQ(a.assignments, b.assignments);
  EXPECT_EQ(a.phi, b.phi);
  EXPECT_EQ(a.loglik_trace, b.loglik_trace);
  EXPECT_NE(fit_lda(s.counts, short_run(3, 43)).assignments, a.assignments);
}

TEST(LdaPropertyTest, LogLikelihoodRisesDuringBurnIn) {
  const auto s = testing::synthetic_matrix(3, 20, 30, 50, 6);
  std::vector<double> gains;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LdaConfig cfg;
    cfg.k = 3;
    cfg.iterations = 100;
    cfg.burn_in = 50;
    cfg.seed = seed;
    const LdaModel model = fit_lda(s.counts, cfg);
    // Entry 0 is the random start, entry 5 follows sweep 50.
    gains.push_back(model.loglik_trace[5] - model.loglik_trace[0]);
  }
  std::nth_element(gains.begin(), gains.begin() + 5, gains.end());
  EXPECT_GT(gains[5], 0.0);
}

TEST(LdaPropertyTest, TraceLayout) {
  const DocTermMatrix m = testing::random_counts(6, 5, 3);
  LdaConfig cfg = short_run(2, 0);
  cfg.iterations = 35;
  const LdaModel model = fit_lda(m, cfg);
  // Initial state, sweeps 10, 20, 30 and the final sweep 35.
  EXPECT_EQ(model.loglik_trace.size(), 5u);
  EXPECT_EQ(model.assignments.size(), count_tokens(m));
}

}  // namespace
}  // namespace topicforge
