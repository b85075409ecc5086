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

#include "topicforge/matrix_io.h"

#include <fstream>
#include <sstream>

#include "topicforge/error.h"
#include "topicforge/format.h"

namespace topicforge {
namespace {

Error malformed(const std::string& what) {
  return Error(ErrorCode::kMalformedInput, what);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound,
                "cannot open '" + path.string() + "'");
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write '" + path.string() + "'");
  }
  return out;
}

}  // namespace

void write_matrix(std::ostream& out, const DocTermMatrix& m) {
  out << m.n_docs() << ' ' << m.n_terms() << ' ' << m.nnz() << ' '
      << weighting_name(m.weighting()) << '\n';
  for (std::size_t d = 0; d < m.n_docs(); ++d) {
    const auto terms = m.row_terms(d);
    const auto weights = m.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out << d << ' ' << terms[i] << ' ' << format_double(weights[i]) << '\n';
    }
  }
}

DocTermMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw malformed("matrix file is empty");
  std::istringstream header(line);
  std::size_t n_docs = 0, n_terms = 0, nnz = 0;
  std::string weighting;
  if (!(header >> n_docs >> n_terms >> nnz >> weighting)) {
    throw malformed("bad matrix header '" + line + "'");
  }
  std::vector<MatrixEntry> entries;
  entries.reserve(nnz);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    MatrixEntry e{};
    if (!(fields >> e.doc >> e.term >> e.weight)) {
      throw malformed("bad matrix entry on line " + std::to_string(line_no));
    }
    entries.push_back(e);
  }
  if (entries.size() != nnz) {
    throw malformed("matrix header declares " + std::to_string(nnz) +
                    " entries, found " + std::to_string(entries.size()));
  }
  try {
    return DocTermMatrix(n_docs, n_terms, std::move(entries),
                         parse_weighting(weighting));
  } catch (const Error& e) {
    throw malformed(e.what());
  }
}

void write_vocabulary(std::ostream& out, const Vocabulary& vocab) {
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << vocab.term(i) << '\t' << vocab.doc_freq(i) << '\n';
  }
}

Vocabulary read_vocabulary(std::istream& in) {
  std::vector<std::string> terms;
  std::vector<std::size_t> freqs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw malformed("vocabulary line " + std::to_string(line_no) +
                      " has no tab separator");
    }
    terms.push_back(line.substr(0, tab));
    try {
      freqs.push_back(std::stoul(line.substr(tab + 1)));
    } catch (const std::exception&) {
      throw malformed("vocabulary line " + std::to_string(line_no) +
                      " has a bad document frequency");
    }
  }
  try {
    return Vocabulary(std::move(terms), std::move(freqs));
  } catch (const Error& e) {
    throw malformed(e.what());
  }
}

void save_matrix(const std::filesystem::path& path, const DocTermMatrix& m) {
  auto out = open_output(path);
  write_matrix(out, m);
}

DocTermMatrix load_matrix(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matrix(in);
}

void save_vocabulary(const std::filesystem::path& path,
                     const Vocabulary& vocab) {
  auto out = open_output(path);
  write_vocabulary(out, vocab);
}

Vocabulary load_vocabulary(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_vocabulary(in);
}

}  // namespace topicforge
