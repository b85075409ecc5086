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

#include "topicforge/text.h"

#include "topicforge/error.h"
#include "topicforge/porter_stemmer.h"

namespace topicforge {
namespace {

bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool starts_with_at(std::string_view text, size_t pos, std::string_view what) {
  return text.substr(pos, what.size()) == what;
}

// Replaces every http://, https:// or www. run (up to the next whitespace)
// with a space. A prefix only counts at the start of the text or after a
// non-alphanumeric character, so words such as "awww." survive.
std::string strip_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const bool boundary = i == 0 || !is_alnum(text[i - 1]);
    if (boundary && (starts_with_at(text, i, "http://") ||
                     starts_with_at(text, i, "https://") ||
                     starts_with_at(text, i, "www."))) {
      while (i < text.size() && !is_space(text[i])) ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

// Replaces each complete <...> span with a space. An unmatched '<' is kept
// and later treated as punctuation.
std::string strip_tags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<') {
      const size_t close = text.find('>', i + 1);
      if (close != std::string_view::npos) {
        out.push_back(' ');
        i = close + 1;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

bool has_letter(std::string_view token) {
  for (char c : token) {
    if (c >= 'a' && c <= 'z') return true;
  }
  return false;
}

}  // namespace

void PreprocessConfig::validate() const {
  if (min_df < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_df must be >= 1");
  }
  if (!(max_df_ratio > 0.0 && max_df_ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_df_ratio must lie in (0, 1]");
  }
}

std::vector<std::string> preprocess(std::string_view raw,
                                    const PreprocessConfig& cfg) {
  std::string lowered(raw);
  for (char& c : lowered) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  std::string text = strip_tags(strip_urls(lowered));
  for (char& c : text) {
    if (!is_alnum(c)) c = ' ';
  }

  auto keep = [&cfg](std::string_view token) {
    return token.size() >= cfg.min_token_len && has_letter(token) &&
           !cfg.stopwords.contains(token);
  };

  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const size_t start = pos;
    while (pos < text.size() && text[pos] != ' ') ++pos;
    if (pos == start) break;
    const std::string_view token(text.data() + start, pos - start);
    if (!keep(token)) continue;
    if (!cfg.stemming) {
      tokens.emplace_back(token);
      continue;
    }
    std::string stem = porter_stem(token);
    if (keep(stem)) tokens.push_back(std::move(stem));
  }
  return tokens;
}

}  // namespace topicforge
