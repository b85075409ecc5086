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

#include "topicforge/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "topicforge/error.h"

namespace topicforge {

Vocabulary::Vocabulary(std::vector<std::string> terms,
                       std::vector<std::size_t> doc_freq)
    : terms_(std::move(terms)), doc_freq_(std::move(doc_freq)) {
  if (terms_.size() != doc_freq_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vocabulary terms and document frequencies differ in length");
  }
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0 && !(terms_[i - 1] < terms_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vocabulary terms must be unique and sorted, got '" +
                      terms_[i - 1] + "' before '" + terms_[i] + "'");
    }
    if (doc_freq_[i] < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "term '" + terms_[i] + "' has zero document frequency");
    }
    index_.emplace(terms_[i], i);
  }
}

std::optional<std::size_t> Vocabulary::find(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const char* weighting_name(Weighting weighting) {
  return weighting == Weighting::kRawCount ? "RawCount" : "TfIdf";
}

Weighting parse_weighting(const std::string& name) {
  if (name == "RawCount") return Weighting::kRawCount;
  if (name == "TfIdf") return Weighting::kTfIdf;
  throw Error(ErrorCode::kMalformedInput, "unknown weighting '" + name + "'");
}

DocTermMatrix::DocTermMatrix(std::size_t n_docs, std::size_t n_terms,
                             std::vector<MatrixEntry> entries,
                             Weighting weighting)
    : n_docs_(n_docs), n_terms_(n_terms), weighting_(weighting) {
  for (const MatrixEntry& e : entries) {
    if (e.doc >= n_docs || e.term >= n_terms) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix entry (" + std::to_string(e.doc) + ", " +
                      std::to_string(e.term) + ") out of range");
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix weights must be finite and positive");
    }
    if (weighting == Weighting::kRawCount &&
        e.weight != std::floor(e.weight)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "raw-count matrix weights must be integers");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) {
              return a.doc != b.doc ? a.doc < b.doc : a.term < b.term;
            });
  row_ptr_.assign(n_docs + 1, 0);
  terms_.reserve(entries.size());
  weights_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].doc == entries[i - 1].doc &&
        entries[i].term == entries[i - 1].term) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate matrix entry (" + std::to_string(entries[i].doc) +
                      ", " + std::to_string(entries[i].term) + ")");
    }
    ++row_ptr_[entries[i].doc + 1];
    terms_.push_back(entries[i].term);
    weights_.push_back(entries[i].weight);
  }
  for (std::size_t d = 0; d < n_docs; ++d) row_ptr_[d + 1] += row_ptr_[d];
}

std::vector<MatrixEntry> DocTermMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(nnz());
  for (std::size_t d = 0; d < n_docs_; ++d) {
    for (std::size_t i = row_ptr_[d]; i < row_ptr_[d + 1]; ++i) {
      out.push_back({d, terms_[i], weights_[i]});
    }
  }
  return out;
}

double DocTermMatrix::row_sum(std::size_t doc) const {
  double sum = 0.0;
  for (double w : row_weights(doc)) sum += w;
  return sum;
}

double DocTermMatrix::total() const {
  double sum = 0.0;
  for (double w : weights_) sum += w;
  return sum;
}

double DocTermMatrix::frobenius_norm_squared() const {
  double sum = 0.0;
  for (double w : weights_) sum += w * w;
  return sum;
}

std::vector<std::size_t> DocTermMatrix::column_doc_freq() const {
  std::vector<std::size_t> df(n_terms_, 0);
  for (std::size_t t : terms_) ++df[t];
  return df;
}

std::vector<std::size_t> DocTermMatrix::empty_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t d = 0; d < n_docs_; ++d) {
    if (row_ptr_[d] == row_ptr_[d + 1]) rows.push_back(d);
  }
  return rows;
}

Eigen::MatrixXd DocTermMatrix::to_dense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(n_docs_), static_cast<Eigen::Index>(n_terms_));
  for (std::size_t d = 0; d < n_docs_; ++d) {
    for (std::size_t i = row_ptr_[d]; i < row_ptr_[d + 1]; ++i) {
      dense(static_cast<Eigen::Index>(d),
            static_cast<Eigen::Index>(terms_[i])) = weights_[i];
    }
  }
  return dense;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto malformed = [&records](const char* what) {
    return Error(ErrorCode::kMalformedCsv,
                 std::string(what) + " in CSV record " +
                     std::to_string(records.size() + 1));
  };
  auto end_record = [&]() {
    record.push_back(std::move(field));
    field.clear();
    // A blank line parses as one empty field; it is not a record.
    if (!(record.size() == 1 && record[0].empty())) {
      records.push_back(std::move(record));
    }
    record.clear();
  };

  bool in_record = false;
  while (i < n) {
    in_record = true;
    if (text[i] == '"') {
      ++i;
      for (;;) {
        if (i >= n) throw malformed("unterminated quoted field");
        if (text[i] == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.push_back(text[i++]);
      }
      if (i < n && text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
      if (i < n && text[i] != ',' && text[i] != '\n') {
        throw malformed("unexpected character after closing quote");
      }
    } else {
      while (i < n && text[i] != ',' && text[i] != '\n') {
        if (text[i] == '"') throw malformed("stray quote");
        if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
          ++i;
          continue;
        }
        field.push_back(text[i++]);
      }
    }
    if (i >= n) break;
    if (text[i] == ',') {
      record.push_back(std::move(field));
      field.clear();
      ++i;
    } else {
      end_record();
      in_record = false;
      ++i;
    }
  }
  if (in_record) end_record();
  return records;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open input file '" + path.string() + "'");
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  std::string text = contents.str();
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  return text;
}

void add_document(LoadedCorpus& corpus, std::string id, std::string raw,
                  const PreprocessConfig& cfg) {
  ++corpus.records_read;
  std::vector<std::string> tokens = preprocess(raw, cfg);
  if (tokens.empty()) {
    ++corpus.dropped;
    return;
  }
  corpus.documents.push_back({std::move(id), std::move(raw), std::move(tokens)});
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorCode::kMissingColumn,
                "CSV header has no column named '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

LoadedCorpus load_corpus(const std::filesystem::path& path,
                         const InputFormat& format,
                         const PreprocessConfig& cfg) {
  const std::string text = read_file(path);
  LoadedCorpus corpus;

  if (std::holds_alternative<LinePerDoc>(format)) {
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      std::string line = text.substr(pos, eol - pos);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      pos = eol + 1;
      ++line_no;
      add_document(corpus, std::to_string(line_no), std::move(line), cfg);
    }
    return corpus;
  }

  const auto& csv = std::get<CsvColumn>(format);
  auto records = parse_csv(text);
  if (records.empty()) {
    throw Error(ErrorCode::kMalformedCsv,
                "CSV file '" + path.string() + "' has no header record");
  }
  const std::vector<std::string>& header = records.front();
  const std::size_t text_col = column_index(header, csv.name);
  std::optional<std::size_t> id_col;
  if (csv.id_column) id_col = column_index(header, *csv.id_column);

  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& record = records[r];
    if (record.size() != header.size()) {
      throw Error(ErrorCode::kMalformedCsv,
                  "CSV record " + std::to_string(r + 1) + " has " +
                      std::to_string(record.size()) + " fields, header has " +
                      std::to_string(header.size()));
    }
    std::string id = id_col ? record[*id_col] : std::to_string(r);
    add_document(corpus, std::move(id), std::move(record[text_col]), cfg);
  }
  return corpus;
}

Vocabulary build_vocabulary(std::span<const Document> docs,
                            const PreprocessConfig& cfg) {
  cfg.validate();
  if (docs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot build a vocabulary from zero documents");
  }
  std::unordered_map<std::string, std::size_t> df;
  std::vector<std::string> distinct;
  for (const Document& doc : docs) {
    distinct = doc.tokens;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (const std::string& token : distinct) ++df[token];
  }

  const double max_df = cfg.max_df_ratio * static_cast<double>(docs.size());
  std::vector<std::string> terms;
  for (const auto& [term, count] : df) {
    if (count >= cfg.min_df && static_cast<double>(count) <= max_df) {
      terms.push_back(term);
    }
  }
  if (terms.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary,
                "no term survives pruning (min_df=" +
                    std::to_string(cfg.min_df) + ", max_df_ratio=" +
                    std::to_string(cfg.max_df_ratio) + ")");
  }
  std::sort(terms.begin(), terms.end());
  std::vector<std::size_t> freqs;
  freqs.reserve(terms.size());
  for (const std::string& term : terms) freqs.push_back(df[term]);
  return Vocabulary(std::move(terms), std::move(freqs));
}

DocTermMatrix build_matrix(std::span<const Document> docs,
                           const Vocabulary& vocab) {
  std::vector<MatrixEntry> entries;
  std::vector<std::size_t> ids;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    ids.clear();
    for (const std::string& token : docs[d].tokens) {
      if (auto index = vocab.find(token)) ids.push_back(*index);
    }
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size();) {
      std::size_t j = i;
      while (j < ids.size() && ids[j] == ids[i]) ++j;
      entries.push_back({d, ids[i], static_cast<double>(j - i)});
      i = j;
    }
  }
  return DocTermMatrix(docs.size(), vocab.size(), std::move(entries),
                       Weighting::kRawCount);
}

DocTermMatrix tfidf(const DocTermMatrix& counts) {
  if (counts.weighting() != Weighting::kRawCount) {
    throw Error(ErrorCode::kNotRawCount, "tfidf expects a raw-count matrix");
  }
  const std::vector<std::size_t> df = counts.column_doc_freq();
  const double n_docs = static_cast<double>(counts.n_docs());
  std::vector<double> idf(df.size());
  for (std::size_t t = 0; t < df.size(); ++t) {
    idf[t] = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df[t]))) + 1.0;
  }

  std::vector<MatrixEntry> entries;
  entries.reserve(counts.nnz());
  for (std::size_t d = 0; d < counts.n_docs(); ++d) {
    const auto terms = counts.row_terms(d);
    const auto weights = counts.row_weights(d);
    const std::size_t first = entries.size();
    double norm = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double w = weights[i] * idf[terms[i]];
      norm += w * w;
      entries.push_back({d, terms[i], w});
    }
    norm = std::sqrt(norm);
    for (std::size_t i = first; i < entries.size(); ++i) entries[i].weight /= norm;
  }
  return DocTermMatrix(counts.n_docs(), counts.n_terms(), std::move(entries),
                       Weighting::kTfIdf);
}

}  // namespace topicforge
