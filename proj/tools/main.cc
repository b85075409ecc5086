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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

using topicforge::cli::kExitUsage;

int main(int argc, char** argv) {
  topicforge::cli::GlobalOptions global;
  global.argv.assign(argv, argv + argc);

  CLI::App app{"topicforge: topic modeling toolkit (pLSA, LSA, LDA, NMF)"};
  app.set_version_flag("--version", TOPICFORGE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", global.out, "Output directory")->capture_default_str();
  app.add_option("--seed", global.seed, "Random seed")->capture_default_str();
  app.add_flag("--quiet", global.quiet, "Suppress progress messages");

  topicforge::cli::PreprocessArgs pre;
  auto* preprocess = app.add_subcommand(
      "preprocess", "Tokenize a corpus and write vocabulary and matrices");
  preprocess->add_option("--input", pre.input, "Input corpus file")->required();
  preprocess->add_option("--format", pre.format, "auto, csv or lines")
      ->check(CLI::IsMember({"auto", "csv", "lines"}))
      ->capture_default_str();
  preprocess->add_option("--text-col", pre.text_col, "CSV column with the text");
  preprocess->add_option("--id-col", pre.id_col, "CSV column with document ids");
  preprocess->add_option("--stopwords", pre.stopwords,
                         "Stopword file (default: $TOPICFORGE_STOPWORDS or "
                         "the built-in list)");
  preprocess->add_option("--min-token-len", pre.min_token_len)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  preprocess->add_option("--min-df", pre.min_df)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  preprocess->add_option("--max-df-ratio", pre.max_df_ratio)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  preprocess->add_flag("--no-stem", pre.no_stem, "Disable Porter stemming");

  topicforge::cli::FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit one topic model");
  fit_cmd->add_option("--model", fit.model, "plsa, lsa, lda or nmf")
      ->required()
      ->check(CLI::IsMember({"plsa", "lsa", "lda", "nmf"}));
  fit_cmd->add_option("-k,--topics", fit.topics, "Number of topics")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fit_cmd->add_option("--in", fit.in,
                      "Directory with preprocess outputs (default: --out)");
  fit_cmd->add_option("--iters", fit.iters,
                      "EM / Gibbs / update iterations (pLSA 200, LDA 1000, "
                      "NMF 200)")
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--alpha", fit.alpha, "LDA alpha (default 50/k)")
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--beta", fit.beta, "LDA beta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fit_cmd->add_option("--tol", fit.tol,
                      "Relative convergence tolerance (pLSA, NMF; 1e-6)")
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--burn-in", fit.burn_in,
                      "LDA burn-in sweeps (default 200, capped at iters/5)");
  fit_cmd->add_option("--weighting", fit.weighting,
                      "auto (raw for pLSA/LDA, tfidf for LSA/NMF), raw, tfidf")
      ->check(CLI::IsMember({"auto", "raw", "tfidf"}))
      ->capture_default_str();
  fit_cmd->add_flag("--include-assignments", fit.include_assignments,
                    "Write LDA token assignments");

  topicforge::cli::ReportArgs report;
  auto add_report_options = [&report](CLI::App* cmd) {
    cmd->add_option("--in", report.in,
                    "Directory with model JSON files (default: --out)");
    cmd->add_option("--workdir", report.workdir,
                    "Directory with preprocess outputs (default: --in)");
    cmd->add_option("--top-n", report.top_n, "Terms per topic")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
  };
  auto* report_cmd =
      app.add_subcommand("report", "Write topic tables, curves and comparison");
  add_report_options(report_cmd);
  report_cmd->add_flag("--compare-only", report.compare_only,
                       "Only write compare.json and compare.txt");
  auto* compare_cmd =
      app.add_subcommand("compare", "Same as report --compare-only");
  add_report_options(compare_cmd);

  topicforge::cli::SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Write a planted-topic synthetic corpus");
  synth_cmd->add_option("-k", synth.k, "Planted topics")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--words", synth.words, "Vocabulary size per topic")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--docs", synth.docs, "Documents per topic")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--len", synth.len, "Tokens per document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*preprocess) return topicforge::cli::run_preprocess(global, pre);
  if (*fit_cmd) return topicforge::cli::run_fit(global, fit);
  if (*report_cmd) return topicforge::cli::run_report(global, report);
  if (*compare_cmd) {
    report.compare_only = true;
    return topicforge::cli::run_report(global, report);
  }
  return topicforge::cli::run_synth(global, synth);
}
