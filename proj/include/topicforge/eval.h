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

#ifndef TOPICFORGE_EVAL_H_
#define TOPICFORGE_EVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "topicforge/corpus.h"
#include "topicforge/lda.h"
#include "topicforge/lsa.h"
#include "topicforge/nmf.h"
#include "topicforge/plsa.h"
#include "topicforge/types.h"

namespace topicforge {

struct TermWeight {
  std::string term;
  double weight = 0.0;
};

struct TopicSummary {
  std::size_t topic_id = 0;
  std::vector<TermWeight> top_terms;
};

enum class RankBy { kValue, kMagnitude };

// The n highest-ranked terms, best first, ties broken by ascending
// vocabulary index. kMagnitude ranks by |weight| but reports the signed
// weight. Throws kLengthMismatch if weights.size() != vocab.size(),
// kInvalidArgument if n == 0.
TopicSummary top_terms(std::span<const double> weights, const Vocabulary& vocab,
                       std::size_t n, std::size_t topic_id = 0,
                       RankBy rank_by = RankBy::kValue);

// Mean document-topic row. Throws kNotStochastic when a row has a negative
// entry or does not sum to 1 within 1e-6.
std::vector<double> topic_distribution(const RowMatrix& doc_topic);

// Per-term sorted document lists for co-occurrence counting.
class CoDocumentIndex {
 public:
  explicit CoDocumentIndex(const DocTermMatrix& m);

  std::size_t n_terms() const { return docs_.size(); }
  std::size_t doc_count(std::size_t term) const { return docs_.at(term).size(); }
  std::size_t co_doc_count(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<std::size_t>> docs_;
};

struct Coherence {
  double score = 0.0;
  // Set when fewer than two terms were given (empty sum, score 0).
  bool degenerate = false;
};

// UMass: sum_{i>=2} sum_{j<i} log((D(w_i, w_j) + 1) / D(w_j)) over terms in
// the given (descending weight) order. Throws kUnknownTerm for a term
// missing from the vocabulary or occurring in no document.
Coherence umass_coherence(std::span<const std::string> terms,
                          const Vocabulary& vocab,
                          const CoDocumentIndex& index);
Coherence umass_coherence(std::span<const std::string> terms,
                          const Vocabulary& vocab, const DocTermMatrix& m);

struct WordcloudRecord {
  std::string term;
  double weight = 0.0;
};

// |weight| min-max scaled onto [1, 100]; a zero range maps every term to
// 100.
std::vector<WordcloudRecord> wordcloud_export(const TopicSummary& summary);

using AnyModel = std::variant<PlsaModel, LsaModel, LdaModel, NmfModel>;

struct FittedModel {
  AnyModel model;
  double fit_seconds = 0.0;
};

// "plsa", "lsa", "lda" or "nmf".
std::string model_name(const AnyModel& model);
std::size_t model_topics(const AnyModel& model);
std::size_t model_terms(const AnyModel& model);

// K x n_terms weights used for ranking terms: P(w|z), signed LSA loadings,
// phi, or column-normalized NMF W.
RowMatrix topic_term_weights(const AnyModel& model);
RankBy term_ranking(const AnyModel& model);

// n_docs x K row-stochastic matrix: P(z|d), L1-normalized |LSA scores|,
// theta, or normalized NMF H columns. Rows without mass become uniform.
RowMatrix doc_topic_weights(const AnyModel& model);

struct ModelObjective {
  // "log_likelihood" (pLSA), "frobenius_residual" (LSA),
  // "joint_log_likelihood" (LDA) or "frobenius_error" (NMF).
  std::string kind;
  double value = 0.0;
};
ModelObjective final_objective(const AnyModel& model);

struct ComparisonRow {
  std::string model;
  std::size_t k = 0;
  double mean_coherence = 0.0;
  std::vector<double> topic_coherence;
  ModelObjective objective;
  double fit_seconds = 0.0;
  std::vector<TopicSummary> topics;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // descending mean coherence
};

// Throws kInvalidArgument for an empty model list or top_n < 2 and
// kVocabularyMismatch when a model or the matrix disagrees with vocab.
ComparisonReport compare(std::span<const FittedModel> models,
                         const DocTermMatrix& m, const Vocabulary& vocab,
                         std::size_t top_n);

}  // namespace topicforge

#endif  // TOPICFORGE_EVAL_H_
