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

#ifndef TOPICFORGE_TOOLS_COMMANDS_H_
#define TOPICFORGE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace topicforge::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCompute = 3;

struct GlobalOptions {
  std::filesystem::path out = ".";
  std::uint64_t seed = 0;
  bool quiet = false;
  std::vector<std::string> argv;
};

struct PreprocessArgs {
  std::filesystem::path input;
  std::string format = "auto";  // auto | csv | lines
  std::optional<std::string> text_col;
  std::optional<std::string> id_col;
  std::optional<std::filesystem::path> stopwords;
  std::size_t min_token_len = 2;
  std::size_t min_df = 2;
  double max_df_ratio = 0.95;
  bool no_stem = false;
};

struct FitArgs {
  std::string model;
  std::size_t topics = 10;
  std::optional<std::filesystem::path> in;
  std::optional<std::size_t> iters;
  std::optional<double> alpha;
  double beta = 0.01;
  std::optional<double> tol;
  std::optional<std::size_t> burn_in;
  std::string weighting = "auto";  // auto | raw | tfidf
  bool include_assignments = false;
};

struct ReportArgs {
  std::optional<std::filesystem::path> in;
  std::optional<std::filesystem::path> workdir;
  std::size_t top_n = 10;
  bool compare_only = false;
};

struct SynthArgs {
  std::size_t k = 3;
  std::size_t words = 20;
  std::size_t docs = 100;
  std::size_t len = 50;
};

int run_preprocess(const GlobalOptions& global, const PreprocessArgs& args);
int run_fit(const GlobalOptions& global, const FitArgs& args);
int run_report(const GlobalOptions& global, const ReportArgs& args);
int run_synth(const GlobalOptions& global, const SynthArgs& args);

}  // namespace topicforge::cli

#endif  // TOPICFORGE_TOOLS_COMMANDS_H_
