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

#ifndef TOPICFORGE_CORPUS_H_
#define TOPICFORGE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "topicforge/text.h"
#include "topicforge/types.h"

namespace topicforge {

struct Document {
  std::string id;
  std::string raw;
  std::vector<std::string> tokens;
};

// Bijective term <-> index map over lexicographically sorted terms, with
// the number of documents containing each term.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Throws kInvalidArgument unless terms are strictly increasing, sizes
  // agree and every doc_freq is >= 1.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq);

  std::size_t size() const { return terms_.size(); }
  const std::string& term(std::size_t index) const { return terms_.at(index); }
  std::size_t doc_freq(std::size_t index) const { return doc_freq_.at(index); }
  std::optional<std::size_t> find(const std::string& term) const;

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::size_t>& doc_freqs() const { return doc_freq_; }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> doc_freq_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Weighting { kRawCount, kTfIdf };

const char* weighting_name(Weighting weighting);
// Accepts the names produced by weighting_name().
Weighting parse_weighting(const std::string& name);

struct MatrixEntry {
  std::size_t doc;
  std::size_t term;
  double weight;
};

// Sparse docs x terms matrix in compressed-row form. Only positive weights
// are stored; within a row, terms are strictly increasing.
class DocTermMatrix {
 public:
  DocTermMatrix() = default;
  // Entries may arrive in any order. Throws kInvalidArgument on an
  // out-of-range index, a non-positive or non-finite weight, a duplicate
  // (doc, term) pair, or a non-integral weight under kRawCount.
  DocTermMatrix(std::size_t n_docs, std::size_t n_terms,
                std::vector<MatrixEntry> entries, Weighting weighting);

  std::size_t n_docs() const { return n_docs_; }
  std::size_t n_terms() const { return n_terms_; }
  std::size_t nnz() const { return terms_.size(); }
  Weighting weighting() const { return weighting_; }

  std::span<const std::size_t> row_terms(std::size_t doc) const {
    return {terms_.data() + row_ptr_[doc], row_ptr_[doc + 1] - row_ptr_[doc]};
  }
  std::span<const double> row_weights(std::size_t doc) const {
    return {weights_.data() + row_ptr_[doc],
            row_ptr_[doc + 1] - row_ptr_[doc]};
  }

  std::vector<MatrixEntry> entries() const;
  double row_sum(std::size_t doc) const;
  double total() const;
  double frobenius_norm_squared() const;
  // Number of rows containing each term.
  std::vector<std::size_t> column_doc_freq() const;
  // Rows without any stored entry.
  std::vector<std::size_t> empty_rows() const;
  Eigen::MatrixXd to_dense() const;

 private:
  std::size_t n_docs_ = 0;
  std::size_t n_terms_ = 0;
  Weighting weighting_ = Weighting::kRawCount;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> terms_;
  std::vector<double> weights_;
};

struct LinePerDoc {};
struct CsvColumn {
  std::string name;
  // Column holding document identifiers; the 1-based row number is used
  // when absent.
  std::optional<std::string> id_column;
};
using InputFormat = std::variant<LinePerDoc, CsvColumn>;

struct LoadedCorpus {
  std::vector<Document> documents;
  std::size_t records_read = 0;
  // Records whose token list was empty after preprocessing.
  std::size_t dropped = 0;
};

LoadedCorpus load_corpus(const std::filesystem::path& path,
                         const InputFormat& format,
                         const PreprocessConfig& cfg);

// RFC 4180 parsing of a whole CSV text into records of fields. Throws
// kMalformedCsv naming the 1-based record on a stray quote or an
// unterminated quoted field.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Throws kInvalidArgument on empty docs, kEmptyVocabulary when no term
// survives pruning.
Vocabulary build_vocabulary(std::span<const Document> docs,
                            const PreprocessConfig& cfg);

// Raw counts of vocabulary terms; out-of-vocabulary tokens are ignored and
// documents left without any vocabulary term stay as empty rows.
DocTermMatrix build_matrix(std::span<const Document> docs,
                           const Vocabulary& vocab);

// tf * (ln((1 + n_docs) / (1 + df)) + 1), then each row scaled to unit L2
// norm. Throws kNotRawCount on weighted input.
DocTermMatrix tfidf(const DocTermMatrix& counts);

}  // namespace topicforge

#endif  // TOPICFORGE_CORPUS_H_
