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

#ifndef TOPICFORGE_TEXT_H_
#define TOPICFORGE_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace topicforge {

using StopwordSet = std::set<std::string, std::less<>>;

// Parses a stopword list: one term per line, '#' starts a comment line,
// surrounding whitespace ignored, terms lowercased.
StopwordSet parse_stopwords(std::string_view text);
StopwordSet load_stopwords(const std::filesystem::path& path);

// The list shipped in data/stopwords.txt, compiled into the library.
const StopwordSet& default_stopwords();

struct PreprocessConfig {
  StopwordSet stopwords = default_stopwords();
  std::size_t min_token_len = 2;
  // Vocabulary pruning: keep a term iff
  // min_df <= doc_freq <= max_df_ratio * n_docs.
  std::size_t min_df = 2;
  double max_df_ratio = 0.95;
  bool stemming = true;

  // Throws Error(kInvalidArgument) when min_df < 1 or max_df_ratio is
  // outside (0, 1].
  void validate() const;
};

// Lowercase -> strip URLs -> strip <...> tags -> non-alphanumerics to spaces
// -> split -> drop short or letterless tokens -> drop stopwords -> stem.
// Only ASCII letters and digits count as alphanumeric; any other byte
// (including every byte of a multi-byte UTF-8 sequence) separates tokens.
// Tokens that stemming turns into a stopword or shortens below
// min_token_len are dropped as well.
std::vector<std::string> preprocess(std::string_view raw,
                                    const PreprocessConfig& cfg);

}  // namespace topicforge

#endif  // TOPICFORGE_TEXT_H_
