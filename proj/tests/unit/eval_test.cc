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

#include "topicforge/eval.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "support/coherence_baseline.h"
#include "support/test_util.h"

namespace topicforge {
namespace {

using testing::from_dense;
using Strings = std::vector<std::string>;

Strings names(const TopicSummary& s) {
  Strings out;
  for (const TermWeight& tw : s.top_terms) out.push_back(tw.term);
  return out;
}

Vocabulary vocab_of(Strings terms) {
  std::vector<std::size_t> df(terms.size(), 1);
  return Vocabulary(std::move(terms), std::move(df));
}

TEST(TopTermsTest, PicksLargestInDescendingOrder) {
  const Vocabulary v = vocab_of({"aircraft", "birdstrike", "crew", "detected",
                                 "evidence", "flight", "runway", "strike"});
  const std::vector<double> w = {0.01, 0.12, 0.02, 0.20, 0.15, 0.30, 0.03, 0.17};
  const TopicSummary s = top_terms(w, v, 5, 4);
  EXPECT_EQ(s.topic_id, 4u);
  EXPECT_EQ(names(s),
            (Strings{"flight", "detected", "strike", "evidence", "birdstrike"}));
  EXPECT_DOUBLE_EQ(s.top_terms[0].weight, 0.30);
}

TEST(TopTermsTest, TiesByVocabularyIndex) {
  const Vocabulary v = vocab_of({"a1", "b1", "c1", "d1"});
  const std::vector<double> w(4, 0.25);
  EXPECT_EQ(names(top_terms(w, v, 2)), (Strings{"a1", "b1"}));
}

TEST(TopTermsTest, MoreThanVocabulary) {
  const Vocabulary v = vocab_of({"a1", "b1", "c1"});
  const std::vector<double> w = {0.2, 0.5, 0.3};
  EXPECT_EQ(names(top_terms(w, v, 10)), (Strings{"b1", "c1", "a1"}));
}

TEST(TopTermsTest, MagnitudeRankingKeepsSign) {
  const Vocabulary v = vocab_of({"a1", "b1", "c1"});
  const std::vector<double> w = {0.2, -0.7, 0.3};
  const TopicSummary s = top_terms(w, v, 2, 0, RankBy::kMagnitude);
  EXPECT_EQ(names(s), (Strings{"b1", "c1"}));
  EXPECT_DOUBLE_EQ(s.top_terms[0].weight, -0.7);
}

TEST(TopTermsTest, Errors) {
  const Vocabulary v = vocab_of({"a1", "b1"});
  const std::vector<double> w = {0.2, 0.5, 0.3};
  EXPECT_TF_ERROR(top_terms(w, v, 2), ErrorCode::kLengthMismatch);
  const std::vector<double> ok = {0.2, 0.8};
  EXPECT_TF_ERROR(top_terms(ok, v, 0), ErrorCode::kInvalidArgument);
}

TEST(TopTermsPropertyTest, InvariantToPositiveRescaling) {
  Rng rng(4);
  Strings terms;
  for (int i = 0; i < 40; ++i) terms.push_back("t" + std::to_string(100 + i));
  const Vocabulary v = vocab_of(terms);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> w(40);
    // Coarse values so that ties occur.
    for (double& x : w) x = static_cast<double>(rng.below(8)) / 8.0;
    const double scale = 0.5 + 4.0 * rng.uniform();
    std::vector<double> scaled = w;
    for (double& x : scaled) x *= scale;
    const std::size_t n = 1 + rng.below(45);
    EXPECT_EQ(names(top_terms(w, v, n)), names(top_terms(scaled, v, n)));
    const TopicSummary s = top_terms(w, v, n);
    EXPECT_EQ(s.top_terms.size(), std::min<std::size_t>(n, 40));
    for (std::size_t i = 1; i < s.top_terms.size(); ++i) {
      EXPECT_GE(s.top_terms[i - 1].weight, s.top_terms[i].weight);
    }
  }
}

TEST(TopicDistributionTest, Examples) {
  RowMatrix a(2, 2);
  a << 1, 0, 0, 1;
  EXPECT_EQ(topic_distribution(a), (std::vector<double>{0.5, 0.5}));
  const RowMatrix b = RowMatrix::Constant(5, 4, 0.25);
  for (double x : topic_distribution(b)) EXPECT_DOUBLE_EQ(x, 0.25);
  RowMatrix c(2, 2);
  c << 0.6, 0.4, 0.2, 0.8;
  const auto p = topic_distribution(c);
  EXPECT_NEAR(p[0], 0.4, 1e-15);
  EXPECT_NEAR(p[1], 0.6, 1e-15);
}

TEST(TopicDistributionTest, RejectsNonStochasticRows) {
  RowMatrix a(2, 2);
  a << 0.5, 0.4, 0.5, 0.5;
  EXPECT_TF_ERROR(topic_distribution(a), ErrorCode::kNotStochastic);
  a << 1.5, -0.5, 0.5, 0.5;
  EXPECT_TF_ERROR(topic_distribution(a), ErrorCode::kNotStochastic);
}

TEST(TopicDistributionPropertyTest, DocumentPermutationInvariant) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index docs = 1 + static_cast<Eigen::Index>(rng.below(20));
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.below(6));
    RowMatrix m(docs, k);
    for (Eigen::Index d = 0; d < docs; ++d) {
      for (Eigen::Index z = 0; z < k; ++z) m(d, z) = rng.uniform_positive();
      m.row(d) /= m.row(d).sum();
    }
    RowMatrix reversed = m.colwise().reverse();
    const auto p = topic_distribution(m);
    const auto q = topic_distribution(reversed);
    double sum = 0.0;
    for (Eigen::Index z = 0; z < k; ++z) {
      EXPECT_NEAR(p[z], q[z], 1e-15);
      sum += p[z];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(UmassTest, CoOccurringPair) {
  const DocTermMatrix m = from_dense({{1, 1}, {2, 1}});
  const Vocabulary v = vocab_of({"a1", "b1"});
  const Coherence c = umass_coherence(Strings{"a1", "b1"}, v, m);
  EXPECT_NEAR(c.score, 0.4054651081081644, 1e-15);
  EXPECT_FALSE(c.degenerate);
}

TEST(UmassTest, NeverCoOccurringPair) {
  const DocTermMatrix m = from_dense({{1, 0}, {0, 1}});
  const Vocabulary v = vocab_of({"a1", "b1"});
  EXPECT_EQ(umass_coherence(Strings{"a1", "b1"}, v, m).score, 0.0);
}

TEST(UmassTest, SingleTermIsDegenerate) {
  const DocTermMatrix m = from_dense({{1, 0}, {0, 1}});
  const Vocabulary v = vocab_of({"a1", "b1"});
  const Coherence c = umass_coherence(Strings{"a1"}, v, m);
  EXPECT_EQ(c.score, 0.0);
  EXPECT_TRUE(c.degenerate);
}

TEST(UmassTest, HandEvaluatedTriple) {
  // D(a)=3, D(b)=2, D(c)=1, D(a,b)=2, D(a,c)=1, D(b,c)=1.
  const DocTermMatrix m = from_dense({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}});
  const Vocabulary v = vocab_of({"a1", "b1", "c1"});
  const double expected =
      std::log(3.0 / 3.0) + std::log(2.0 / 3.0) + std::log(2.0 / 2.0);
  EXPECT_NEAR(umass_coherence(Strings{"a1", "b1", "c1"}, v, m).score, expected,
              1e-15);
}

TEST(UmassTest, UnknownTerm) {
  const DocTermMatrix m = from_dense({{1, 1}});
  const Vocabulary v = vocab_of({"a1", "b1"});
  EXPECT_TF_ERROR(umass_coherence(Strings{"a1", "zz"}, v, m),
                  ErrorCode::kUnknownTerm);
}

TEST(UmassPropertyTest, InvariantToRescaledWeights) {
  const auto s = testing::synthetic_matrix(3, 10, 5, 20, 1);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> w(s.vocab.size());
    for (double& x : w) x = rng.uniform();
    std::vector<double> scaled = w;
    for (double& x : scaled) x *= 7.5;
    const Strings a = names(top_terms(w, s.vocab, 8));
    const Strings b = names(top_terms(scaled, s.vocab, 8));
    EXPECT_EQ(umass_coherence(a, s.vocab, s.counts).score,
              umass_coherence(b, s.vocab, s.counts).score);
  }
}

TEST(WordcloudTest, Scaling) {
  auto scaled = [](std::vector<double> weights) {
    TopicSummary s;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      s.top_terms.push_back({"t" + std::to_string(i), weights[i]});
    }
    std::vector<double> out;
    for (const WordcloudRecord& r : wordcloud_export(s)) out.push_back(r.weight);
    return out;
  };
  EXPECT_EQ(scaled({0.4, 0.2}), (std::vector<double>{100, 1}));
  EXPECT_EQ(scaled({0.3, 0.3, 0.3}), (std::vector<double>{100, 100, 100}));
  EXPECT_EQ(scaled({0.7}), (std::vector<double>{100}));
  const auto three = scaled({0.5, 0.3, 0.1});
  EXPECT_NEAR(three[0], 100.0, 1e-12);
  EXPECT_NEAR(three[1], 50.5, 1e-12);
  EXPECT_NEAR(three[2], 1.0, 1e-12);
}

// Property: the endpoints are hit exactly and nothing leaves [1, 100].
TEST(WordcloudTest, EndpointsExactProperty) {
  Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    TopicSummary s;
    const std::size_t n = 2 + rng.below(10);
    for (std::size_t i = 0; i < n; ++i) {
      s.top_terms.push_back({"t" + std::to_string(i), rng.uniform() * 0.1 - 0.02});
    }
    double lo = 100.0, hi = 1.0;
    for (const WordcloudRecord& r : wordcloud_export(s)) {
      ASSERT_GE(r.weight, 1.0);
      ASSERT_LE(r.weight, 100.0);
      lo = std::min(lo, r.weight);
      hi = std::max(hi, r.weight);
    }
    EXPECT_EQ(hi, 100.0);
    EXPECT_EQ(lo, 1.0);
  }
}

// Two single-topic models over the corpus below. Topic "a1 b1" has
// coherence log(1/1) = 0, topic "c1 d1" has log(2/4).
struct TwoModels {
  DocTermMatrix m = from_dense({{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 0},
                                {0, 0, 1, 1}});
  Vocabulary v = vocab_of({"a1", "b1", "c1", "d1"});
  FittedModel good;
  FittedModel poor;

  TwoModels() {
    LdaModel lda;
    lda.phi = RowMatrix(1, 4);
    lda.phi << 0.5, 0.4, 0.05, 0.05;
    lda.theta = RowMatrix::Ones(4, 1);
    good = {lda, 1.5};
    NmfModel nmf;
    nmf.w_factor = RowMatrix(4, 1);
    nmf.w_factor << 0.1, 0.2, 3.0, 1.0;
    nmf.h_factor = RowMatrix::Ones(1, 4);
    nmf.objective_trace = {2.0, 1.0};
    poor = {nmf, 0.5};
  }
};

TEST(CompareTest, OrderedByCoherence) {
  TwoModels t;
  for (const auto& input : {std::vector<FittedModel>{t.poor, t.good},
                            std::vector<FittedModel>{t.good, t.poor}}) {
    const ComparisonReport r = compare(input, t.m, t.v, 2);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0].model, "lda");
    EXPECT_NEAR(r.rows[0].mean_coherence, 0.0, 1e-15);
    EXPECT_EQ(r.rows[1].model, "nmf");
    EXPECT_NEAR(r.rows[1].mean_coherence, std::log(0.5), 1e-15);
    EXPECT_EQ(names(r.rows[1].topics[0]), (Strings{"c1", "d1"}));
    EXPECT_EQ(r.rows[1].objective.kind, "frobenius_error");
    EXPECT_EQ(r.rows[1].objective.value, 1.0);
    EXPECT_EQ(r.rows[1].fit_seconds, 0.5);
  }
}

TEST(CompareTest, SingleModel) {
  TwoModels t;
  const std::vector<FittedModel> one = {t.good};
  const ComparisonReport r = compare(one, t.m, t.v, 3);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].k, 1u);
  EXPECT_EQ(r.rows[0].topics[0].top_terms.size(), 3u);
}

TEST(CompareTest, Errors) {
  TwoModels t;
  const std::vector<FittedModel> one = {t.good};
  EXPECT_TF_ERROR(compare(one, t.m, vocab_of({"a1", "b1", "c1"}), 2),
                  ErrorCode::kVocabularyMismatch);
  LdaModel wide;
  wide.phi = RowMatrix::Constant(1, 5, 0.2);
  wide.theta = RowMatrix::Ones(4, 1);
  const std::vector<FittedModel> bad = {{wide, 0.0}};
  EXPECT_TF_ERROR(compare(bad, t.m, t.v, 2), ErrorCode::kVocabularyMismatch);
  EXPECT_TF_ERROR(compare(std::vector<FittedModel>{}, t.m, t.v, 2),
                  ErrorCode::kInvalidArgument);
}

TEST(ComparePropertyTest, RowsMatchIndependentRuns) {
  const auto s = testing::synthetic_matrix(3, 10, 8, 30, 3);
  PlsaConfig pc;
  pc.k = 3;
  NmfConfig nc;
  nc.k = 3;
  const std::vector<FittedModel> both = {{fit_plsa(s.counts, pc), 0.0},
                                         {fit_nmf(s.counts, nc), 0.0}};
  const ComparisonReport joint = compare(both, s.counts, s.vocab, 5);
  for (const FittedModel& f : both) {
    const ComparisonReport alone =
        compare(std::span<const FittedModel>(&f, 1), s.counts, s.vocab, 5);
    const ComparisonRow* match = nullptr;
    for (const auto& row : joint.rows) {
      if (row.model == alone.rows[0].model) match = &row;
    }
    ASSERT_NE(match, nullptr);
    EXPECT_EQ(match->topic_coherence, alone.rows[0].topic_coherence);
    EXPECT_EQ(match->mean_coherence, alone.rows[0].mean_coherence);
    EXPECT_EQ(match->objective.value, alone.rows[0].objective.value);
  }
}

TEST(CompareTest, PlantedTopicsBeatRandomBaseline) {
  const auto s = testing::synthetic_matrix(3, 20, 30, 50, 7);
  LsaModel lsa = fit_lsa(tfidf(s.counts), 3);
  PlsaConfig pc;
  pc.k = 3;
  NmfConfig nc;
  nc.k = 3;
  LdaConfig lc;
  lc.k = 3;
  lc.iterations = 200;
  lc.burn_in = 50;
  const std::vector<FittedModel> models = {{fit_plsa(s.counts, pc), 0.0},
                                           {lsa, 0.0},
                                           {fit_lda(s.counts, lc), 0.0},
                                           {fit_nmf(tfidf(s.counts), nc), 0.0}};
  const ComparisonReport r = compare(models, s.counts, s.vocab, 10);
  const double baseline =
      testing::random_topic_coherence(s.counts, s.vocab, 3, 10, 100, 1);
  for (const auto& row : r.rows) EXPECT_GT(row.mean_coherence, baseline) << row.model;
}

TEST(ModelAdapterTest, LsaPrevalenceUsesAbsoluteScores) {
  LsaModel lsa;
  lsa.doc_factors = RowMatrix(2, 2);
  lsa.doc_factors << 3, -1, 0, 0;
  lsa.term_factors = RowMatrix::Identity(2, 2);
  lsa.singular_values = Vector::Ones(2);
  const RowMatrix w = doc_topic_weights(lsa);
  EXPECT_DOUBLE_EQ(w(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(w(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(w(1, 0), 0.5);
  EXPECT_EQ(term_ranking(lsa), RankBy::kMagnitude);
  EXPECT_EQ(model_name(lsa), "lsa");
}

}  // namespace
}  // namespace topicforge
