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

#include "topicforge/synthetic.h"

#include "topicforge/error.h"
#include "topicforge/random.h"

namespace topicforge {

std::string synthetic_term(std::size_t block, std::size_t word) {
  return "b" + std::to_string(block) + "w" + std::to_string(word);
}

SyntheticCorpus generate_synthetic(std::size_t k, std::size_t words_per_topic,
                                   std::size_t docs_per_topic,
                                   std::size_t doc_len, std::uint64_t seed) {
  if (k == 0 || words_per_topic == 0 || docs_per_topic == 0 || doc_len == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic corpus counts must all be >= 1");
  }
  SyntheticCorpus corpus;
  corpus.blocks.resize(k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t w = 0; w < words_per_topic; ++w) {
      corpus.blocks[b].push_back(synthetic_term(b, w));
    }
  }

  Rng rng(seed);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t i = 0; i < docs_per_topic; ++i) {
      Document doc;
      doc.id = std::to_string(corpus.documents.size() + 1);
      doc.tokens.reserve(doc_len);
      for (std::size_t t = 0; t < doc_len; ++t) {
        doc.tokens.push_back(corpus.blocks[b][rng.below(words_per_topic)]);
        if (t > 0) doc.raw.push_back(' ');
        doc.raw += doc.tokens.back();
      }
      corpus.documents.push_back(std::move(doc));
      corpus.doc_block.push_back(b);
    }
  }
  return corpus;
}

}  // namespace topicforge
