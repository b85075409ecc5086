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

#ifndef TOPICFORGE_MATRIX_IO_H_
#define TOPICFORGE_MATRIX_IO_H_

#include <filesystem>
#include <iosfwd>

#include "topicforge/corpus.h"

namespace topicforge {

// Sparse triplet format:
//   n_docs n_terms nnz weighting
//   doc term weight        (one line per entry, 0-based indices)
void write_matrix(std::ostream& out, const DocTermMatrix& m);
DocTermMatrix read_matrix(std::istream& in);

// One "term<TAB>doc_freq" line per vocabulary entry, in index order.
void write_vocabulary(std::ostream& out, const Vocabulary& vocab);
Vocabulary read_vocabulary(std::istream& in);

void save_matrix(const std::filesystem::path& path, const DocTermMatrix& m);
DocTermMatrix load_matrix(const std::filesystem::path& path);
void save_vocabulary(const std::filesystem::path& path,
                     const Vocabulary& vocab);
Vocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace topicforge

#endif  // TOPICFORGE_MATRIX_IO_H_
