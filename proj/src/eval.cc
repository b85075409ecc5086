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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "topicforge/error.h"

namespace topicforge {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void normalize_rows_or_uniform(RowMatrix& m) {
  const double uniform = 1.0 / static_cast<double>(m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double sum = m.row(r).sum();
    if (sum > 0.0) {
      m.row(r) /= sum;
    } else {
      m.row(r).setConstant(uniform);
    }
  }
}

}  // namespace

TopicSummary top_terms(std::span<const double> weights, const Vocabulary& vocab,
                       std::size_t n, std::size_t topic_id, RankBy rank_by) {
  if (weights.size() != vocab.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "topic has " + std::to_string(weights.size()) +
                    " weights for a vocabulary of " +
                    std::to_string(vocab.size()));
  }
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");

  auto key = [&](std::size_t i) {
    return rank_by == RankBy::kMagnitude ? std::abs(weights[i]) : weights[i];
  };
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t take = std::min(n, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      const double ka = key(a);
                      const double kb = key(b);
                      return ka != kb ? ka > kb : a < b;
                    });

  TopicSummary summary;
  summary.topic_id = topic_id;
  summary.top_terms.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    summary.top_terms.push_back({vocab.term(order[i]), weights[order[i]]});
  }
  return summary;
}

std::vector<double> topic_distribution(const RowMatrix& doc_topic) {
  if (doc_topic.rows() == 0 || doc_topic.cols() == 0) {
    throw Error(ErrorCode::kNotStochastic, "empty document-topic matrix");
  }
  Vector prevalence = Vector::Zero(doc_topic.cols());
  for (Eigen::Index d = 0; d < doc_topic.rows(); ++d) {
    const double sum = doc_topic.row(d).sum();
    if (std::abs(sum - 1.0) > 1e-6 || doc_topic.row(d).minCoeff() < 0.0) {
      throw Error(ErrorCode::kNotStochastic,
                  "document row " + std::to_string(d) +
                      " is not a probability distribution (sum " +
                      std::to_string(sum) + ")");
    }
    prevalence += doc_topic.row(d).transpose() / sum;
  }
  prevalence /= static_cast<double>(doc_topic.rows());
  return {prevalence.data(), prevalence.data() + prevalence.size()};
}

CoDocumentIndex::CoDocumentIndex(const DocTermMatrix& m) : docs_(m.n_terms()) {
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    for (std::size_t t : m.row_terms(d)) docs_[t].push_back(d);
  }
}

std::size_t CoDocumentIndex::co_doc_count(std::size_t a, std::size_t b) const {
  const auto& x = docs_.at(a);
  const auto& y = docs_.at(b);
  std::size_t count = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

Coherence umass_coherence(std::span<const std::string> terms,
                          const Vocabulary& vocab,
                          const CoDocumentIndex& index) {
  std::vector<std::size_t> ids;
  ids.reserve(terms.size());
  for (const std::string& term : terms) {
    auto id = vocab.find(term);
    if (!id || *id >= index.n_terms()) {
      throw Error(ErrorCode::kUnknownTerm,
                  "term '" + term + "' is not in the vocabulary");
    }
    if (index.doc_count(*id) == 0) {
      throw Error(ErrorCode::kUnknownTerm,
                  "term '" + term + "' occurs in no document");
    }
    ids.push_back(*id);
  }
  if (ids.size() < 2) return {0.0, true};

  double score = 0.0;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double joint = static_cast<double>(index.co_doc_count(ids[i], ids[j]));
      score += std::log((joint + 1.0) / static_cast<double>(index.doc_count(ids[j])));
    }
  }
  return {score, false};
}

Coherence umass_coherence(std::span<const std::string> terms,
                          const Vocabulary& vocab, const DocTermMatrix& m) {
  return umass_coherence(terms, vocab, CoDocumentIndex(m));
}

std::vector<WordcloudRecord> wordcloud_export(const TopicSummary& summary) {
  std::vector<WordcloudRecord> records;
  if (summary.top_terms.empty()) return records;
  double lo = std::abs(summary.top_terms.front().weight);
  double hi = lo;
  for (const TermWeight& tw : summary.top_terms) {
    lo = std::min(lo, std::abs(tw.weight));
    hi = std::max(hi, std::abs(tw.weight));
  }
  const double range = hi - lo;
  for (const TermWeight& tw : summary.top_terms) {
    // Divide first so the endpoints map to exactly 1 and 100.
    const double scaled =
        range > 0.0 ? 1.0 + 99.0 * ((std::abs(tw.weight) - lo) / range) : 100.0;
    records.push_back({tw.term, scaled});
  }
  return records;
}

std::string model_name(const AnyModel& model) {
  return std::visit(Overloaded{
                        [](const PlsaModel&) { return std::string("plsa"); },
                        [](const LsaModel&) { return std::string("lsa"); },
                        [](const LdaModel&) { return std::string("lda"); },
                        [](const NmfModel&) { return std::string("nmf"); },
                    },
                    model);
}

std::size_t model_topics(const AnyModel& model) {
  return std::visit([](const auto& m) { return m.k(); }, model);
}

std::size_t model_terms(const AnyModel& model) {
  return static_cast<std::size_t>(topic_term_weights(model).cols());
}

RowMatrix topic_term_weights(const AnyModel& model) {
  return std::visit(Overloaded{
                        [](const PlsaModel& m) -> RowMatrix { return m.p_w_given_z; },
                        [](const LsaModel& m) -> RowMatrix { return m.term_factors; },
                        [](const LdaModel& m) -> RowMatrix { return m.phi; },
                        [](const NmfModel& m) -> RowMatrix { return nmf_topic_terms(m); },
                    },
                    model);
}

RankBy term_ranking(const AnyModel& model) {
  return std::holds_alternative<LsaModel>(model) ? RankBy::kMagnitude
                                                 : RankBy::kValue;
}

RowMatrix doc_topic_weights(const AnyModel& model) {
  return std::visit(Overloaded{
                        [](const PlsaModel& m) -> RowMatrix {
                          RowMatrix out = m.p_z_given_d;
                          normalize_rows_or_uniform(out);
                          return out;
                        },
                        [](const LsaModel& m) -> RowMatrix {
                          RowMatrix out = m.doc_factors.cwiseAbs();
                          normalize_rows_or_uniform(out);
                          return out;
                        },
                        [](const LdaModel& m) -> RowMatrix { return m.theta; },
                        [](const NmfModel& m) -> RowMatrix { return nmf_doc_topics(m); },
                    },
                    model);
}

ModelObjective final_objective(const AnyModel& model) {
  // NaN when a model carries no trace, e.g. one assembled by hand.
  auto last = [](const std::vector<double>& trace) {
    return trace.empty() ? std::numeric_limits<double>::quiet_NaN()
                         : trace.back();
  };
  return std::visit(
      Overloaded{
          [&](const PlsaModel& m) {
            return ModelObjective{"log_likelihood", last(m.loglik_trace)};
          },
          [](const LsaModel& m) {
            return ModelObjective{"frobenius_residual", lsa_residual(m)};
          },
          [&](const LdaModel& m) {
            return ModelObjective{"joint_log_likelihood", last(m.loglik_trace)};
          },
          [&](const NmfModel& m) {
            return ModelObjective{"frobenius_error", last(m.objective_trace)};
          },
      },
      model);
}

ComparisonReport compare(std::span<const FittedModel> models,
                         const DocTermMatrix& m, const Vocabulary& vocab,
                         std::size_t top_n) {
  if (models.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "compare needs at least one model");
  }
  if (top_n < 2) throw Error(ErrorCode::kInvalidArgument, "top_n must be >= 2");
  if (m.n_terms() != vocab.size()) {
    throw Error(ErrorCode::kVocabularyMismatch,
                "matrix has " + std::to_string(m.n_terms()) +
                    " terms, vocabulary has " + std::to_string(vocab.size()));
  }
  const CoDocumentIndex index(m);

  ComparisonReport report;
  for (const FittedModel& fitted : models) {
    const RowMatrix weights = topic_term_weights(fitted.model);
    if (static_cast<std::size_t>(weights.cols()) != vocab.size()) {
      throw Error(ErrorCode::kVocabularyMismatch,
                  model_name(fitted.model) + " model has " +
                      std::to_string(weights.cols()) +
                      " terms, vocabulary has " + std::to_string(vocab.size()));
    }
    ComparisonRow row;
    row.model = model_name(fitted.model);
    row.k = static_cast<std::size_t>(weights.rows());
    row.objective = final_objective(fitted.model);
    row.fit_seconds = fitted.fit_seconds;
    const RankBy rank_by = term_ranking(fitted.model);
    double total = 0.0;
    for (Eigen::Index z = 0; z < weights.rows(); ++z) {
      const Vector topic = weights.row(z).transpose();
      TopicSummary summary =
          top_terms({topic.data(), static_cast<std::size_t>(topic.size())},
                    vocab, top_n, static_cast<std::size_t>(z), rank_by);
      std::vector<std::string> terms;
      for (const TermWeight& tw : summary.top_terms) terms.push_back(tw.term);
      const double score = umass_coherence(terms, vocab, index).score;
      row.topic_coherence.push_back(score);
      total += score;
      row.topics.push_back(std::move(summary));
    }
    row.mean_coherence = total / static_cast<double>(row.k);
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) {
                     return a.mean_coherence > b.mean_coherence;
                   });
  return report;
}

}  // namespace topicforge
