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

#ifndef TOPICFORGE_SYNTHETIC_H_
#define TOPICFORGE_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topicforge/corpus.h"

namespace topicforge {

// Planted-topic corpus: k disjoint vocabulary blocks; every document draws
// all of its tokens uniformly from a single block. Documents are grouped by
// block: documents [b * docs_per_topic, (b + 1) * docs_per_topic) use
// block b.
struct SyntheticCorpus {
  std::vector<Document> documents;
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::size_t> doc_block;
};

// Term names ("b<block>w<word>") survive preprocessing unchanged: they are
// lowercase, contain letters, end in a digit (so no suffix rule applies)
// and are not stopwords.
std::string synthetic_term(std::size_t block, std::size_t word);

// Throws kInvalidArgument if any count is zero.
SyntheticCorpus generate_synthetic(std::size_t k, std::size_t words_per_topic,
                                   std::size_t docs_per_topic,
                                   std::size_t doc_len, std::uint64_t seed);

}  // namespace topicforge

#endif  // TOPICFORGE_SYNTHETIC_H_
