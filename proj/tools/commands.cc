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

#include "commands.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "topicforge/corpus.h"
#include "topicforge/error.h"
#include "topicforge/eval.h"
#include "topicforge/format.h"
#include "topicforge/lda.h"
#include "topicforge/lsa.h"
#include "topicforge/matrix_io.h"
#include "topicforge/model_io.h"
#include "topicforge/nmf.h"
#include "topicforge/plsa.h"
#include "topicforge/synthetic.h"

namespace topicforge::cli {
namespace {

namespace fs = std::filesystem;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void log(const GlobalOptions& global, const std::string& message) {
  if (!global.quiet) std::cerr << message << '\n';
}

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return code;
}

// Input problems are usage errors; everything raised by a model or the
// evaluation code is computational.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFileNotFound:
    case ErrorCode::kMalformedCsv:
    case ErrorCode::kMissingColumn:
    case ErrorCode::kMalformedInput:
      return kExitUsage;
    default:
      return kExitCompute;
  }
}

std::ofstream open_text(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write '" + path.string() + "'");
  }
  return out;
}

Json manifest(const GlobalOptions& global, const std::string& command) {
  return Json{{"tool", "topicforge"},
              {"version", TOPICFORGE_VERSION},
              {"command", command},
              {"argv", global.argv},
              {"seed", global.seed},
              {"output_dir", global.out.string()}};
}

StopwordSet resolve_stopwords(const PreprocessArgs& args) {
  if (args.stopwords) return load_stopwords(*args.stopwords);
  if (const char* env = std::getenv("TOPICFORGE_STOPWORDS"); env && *env) {
    return load_stopwords(env);
  }
  return default_stopwords();
}

}  // namespace

int run_preprocess(const GlobalOptions& global, const PreprocessArgs& args) {
  std::string format = args.format;
  if (format == "auto") {
    format = args.input.extension() == ".csv" ? "csv" : "lines";
  }
  if (format == "csv" && !args.text_col) {
    return fail(kExitUsage, "--text-col is required for CSV input");
  }

  try {
    Stopwatch total;
    PreprocessConfig cfg;
    cfg.stopwords = resolve_stopwords(args);
    cfg.min_token_len = args.min_token_len;
    cfg.min_df = args.min_df;
    cfg.max_df_ratio = args.max_df_ratio;
    cfg.stemming = !args.no_stem;
    cfg.validate();

    InputFormat input_format = LinePerDoc{};
    if (format == "csv") input_format = CsvColumn{*args.text_col, args.id_col};

    Stopwatch load_time;
    LoadedCorpus corpus = load_corpus(args.input, input_format, cfg);
    const double load_seconds = load_time.seconds();
    if (corpus.documents.empty()) {
      return fail(kExitUsage, "no document has any token after preprocessing");
    }
    Stopwatch build_time;
    const Vocabulary vocab = build_vocabulary(corpus.documents, cfg);
    const DocTermMatrix counts = build_matrix(corpus.documents, vocab);
    const DocTermMatrix weighted = tfidf(counts);
    const double build_seconds = build_time.seconds();

    fs::create_directories(global.out);
    save_vocabulary(global.out / "vocab.txt", vocab);
    save_matrix(global.out / "counts.mtx", counts);
    save_matrix(global.out / "tfidf.mtx", weighted);
    {
      auto ids = open_text(global.out / "docs.txt");
      for (const Document& doc : corpus.documents) ids << doc.id << '\n';
    }
    const std::size_t empty_rows = counts.empty_rows().size();
    save_json(global.out / "stats.json",
              Json{{"docs_in", corpus.records_read},
                   {"docs_dropped", corpus.dropped},
                   {"docs", corpus.documents.size()},
                   {"empty_rows", empty_rows},
                   {"vocab_size", vocab.size()},
                   {"nnz", counts.nnz()},
                   {"tokens", static_cast<std::size_t>(counts.total())}});

    Json m = manifest(global, "preprocess");
    m["input"] = fs::absolute(args.input).string();
    m["format"] = format;
    if (args.text_col) m["text_col"] = *args.text_col;
    m["preprocess"] = {{"stopword_count", cfg.stopwords.size()},
                       {"min_token_len", cfg.min_token_len},
                       {"min_df", cfg.min_df},
                       {"max_df_ratio", cfg.max_df_ratio},
                       {"stemming", cfg.stemming}};
    m["wall_time_seconds"] = {{"load", load_seconds},
                              {"build", build_seconds},
                              {"total", total.seconds()}};
    save_json(global.out / "preprocess.manifest.json", m);

    log(global, "preprocess: " + std::to_string(corpus.records_read) +
                    " records, " + std::to_string(corpus.dropped) +
                    " dropped, " + std::to_string(vocab.size()) + " terms, " +
                    std::to_string(empty_rows) + " empty rows");
    return kExitOk;
  } catch (const Error& e) {
    return fail(kExitUsage, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitUsage, e.what());
  }
}

int run_fit(const GlobalOptions& global, const FitArgs& args) {
  const fs::path in = args.in.value_or(global.out);
  std::string weighting = args.weighting;
  if (weighting == "auto") {
    weighting = (args.model == "lsa" || args.model == "nmf") ? "tfidf" : "raw";
  }

  try {
    Stopwatch total;
    Stopwatch load_time;
    const DocTermMatrix m =
        load_matrix(in / (weighting == "raw" ? "counts.mtx" : "tfidf.mtx"));
    const double load_seconds = load_time.seconds();

    Json config{{"k", args.topics}, {"seed", global.seed}, {"weighting", weighting}};
    Json model_json;
    Stopwatch fit_time;
    if (args.model == "plsa") {
      PlsaConfig cfg;
      cfg.k = args.topics;
      cfg.seed = global.seed;
      if (args.iters) cfg.max_iter = *args.iters;
      if (args.tol) cfg.tol = *args.tol;
      config["max_iter"] = cfg.max_iter;
      config["tol"] = cfg.tol;
      const PlsaModel model = fit_plsa(m, cfg);
      model_json = to_json(model);
      log(global, "plsa: " + std::to_string(model.iterations_run) +
                      " EM steps, log-likelihood " +
                      format_double(model.loglik_trace.back()));
    } else if (args.model == "lsa") {
      const LsaModel model = fit_lsa(m, args.topics);
      model_json = to_json(model);
      log(global, "lsa: top singular value " +
                      format_double(model.singular_values[0]));
    } else if (args.model == "lda") {
      LdaConfig cfg;
      cfg.k = args.topics;
      cfg.seed = global.seed;
      cfg.beta = args.beta;
      cfg.alpha = args.alpha;
      if (args.iters) cfg.iterations = *args.iters;
      cfg.burn_in = args.burn_in.value_or(
          std::min<std::size_t>(cfg.burn_in, cfg.iterations / 5));
      config["alpha"] = cfg.resolved_alpha();
      config["beta"] = cfg.beta;
      config["iterations"] = cfg.iterations;
      config["burn_in"] = cfg.burn_in;
      config["sample_lag"] = cfg.sample_lag;
      const LdaModel model = fit_lda(m, cfg);
      model_json = to_json(model, args.include_assignments);
      log(global, "lda: " + std::to_string(cfg.iterations) +
                      " sweeps, joint log-likelihood " +
                      format_double(model.loglik_trace.back()));
    } else {
      NmfConfig cfg;
      cfg.k = args.topics;
      cfg.seed = global.seed;
      if (args.iters) cfg.max_iter = *args.iters;
      if (args.tol) cfg.tol = *args.tol;
      config["max_iter"] = cfg.max_iter;
      config["tol"] = cfg.tol;
      const NmfModel model = fit_nmf(m, cfg);
      model_json = to_json(model);
      log(global, "nmf: " + std::to_string(model.iterations_run) +
                      " updates, objective " +
                      format_double(model.objective_trace.back()));
    }
    const double fit_seconds = fit_time.seconds();

    fs::create_directories(global.out);
    save_json(global.out / (args.model + ".json"), model_json);

    Json man = manifest(global, "fit");
    man["input_dir"] = fs::absolute(in).string();
    man["model"] = args.model;
    man["model_config"] = config;
    man["wall_time_seconds"] = {{"load", load_seconds},
                                {"fit", fit_seconds},
                                {"total", total.seconds()}};
    save_json(global.out / (args.model + ".manifest.json"), man);
    return kExitOk;
  } catch (const Error& e) {
    return fail(exit_code_for(e.code()), e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitUsage, e.what());
  }
}

int run_report(const GlobalOptions& global, const ReportArgs& args) {
  const fs::path model_dir = args.in.value_or(global.out);
  const fs::path workdir = args.workdir.value_or(model_dir);
  static const char* const kModels[] = {"plsa", "lsa", "lda", "nmf"};

  try {
    std::vector<FittedModel> models;
    for (const char* name : kModels) {
      const fs::path path = model_dir / (std::string(name) + ".json");
      if (!fs::exists(path)) continue;
      FittedModel fitted{model_from_json(load_json(path)), 0.0};
      const fs::path man = model_dir / (std::string(name) + ".manifest.json");
      if (fs::exists(man)) {
        const Json m = load_json(man);
        fitted.fit_seconds = m.value("/wall_time_seconds/fit"_json_pointer, 0.0);
      }
      models.push_back(std::move(fitted));
    }
    if (models.empty()) {
      return fail(kExitUsage, "no model JSON found in '" + model_dir.string() + "'");
    }
    const Vocabulary vocab = load_vocabulary(workdir / "vocab.txt");
    const DocTermMatrix counts = load_matrix(workdir / "counts.mtx");

    const ComparisonReport report = compare(models, counts, vocab, args.top_n);
    fs::create_directories(global.out);
    save_json(global.out / "compare.json", report_to_json(report));
    open_text(global.out / "compare.txt") << report_to_text(report);
    if (args.compare_only) return kExitOk;

    auto topics = open_text(global.out / "topics.csv");
    auto prevalence = open_text(global.out / "prevalence.csv");
    auto coherence = open_text(global.out / "coherence.csv");
    topics << "model,topic_id,rank,term,weight\n";
    prevalence << "model,topic_id,prevalence\n";
    coherence << "model,topic_id,coherence\n";

    // Rows follow the fixed plsa, lsa, lda, nmf order, not the report
    // ranking, so the files are stable when coherences tie.
    for (const FittedModel& fitted : models) {
      const std::string name = model_name(fitted.model);
      const ComparisonRow* row = nullptr;
      for (const ComparisonRow& r : report.rows) {
        if (r.model == name) row = &r;
      }
      for (const TopicSummary& summary : row->topics) {
        for (std::size_t rank = 0; rank < summary.top_terms.size(); ++rank) {
          topics << name << ',' << summary.topic_id << ',' << rank + 1 << ','
                 << summary.top_terms[rank].term << ','
                 << format_double(summary.top_terms[rank].weight) << '\n';
        }
        Json cloud = Json::array();
        for (const WordcloudRecord& rec : wordcloud_export(summary)) {
          cloud.push_back({{"term", rec.term}, {"weight", rec.weight}});
        }
        save_json(global.out / ("wordcloud-" + name + "-" +
                                std::to_string(summary.topic_id) + ".json"),
                  cloud);
        coherence << name << ',' << summary.topic_id << ','
                  << format_double(row->topic_coherence[summary.topic_id])
                  << '\n';
      }
      const std::vector<double> shares =
          topic_distribution(doc_topic_weights(fitted.model));
      for (std::size_t z = 0; z < shares.size(); ++z) {
        prevalence << name << ',' << z << ',' << format_double(shares[z]) << '\n';
      }
      if (const auto* lsa = std::get_if<LsaModel>(&fitted.model)) {
        auto curve = open_text(global.out / "variance_curve.csv");
        curve << "k,cumulative_variance\n";
        for (const auto& [k, fraction] : variance_curve(*lsa)) {
          curve << k << ',' << format_double(fraction) << '\n';
        }
      }
    }
    log(global, "report: " + std::to_string(models.size()) + " models written to " +
                    global.out.string());
    return kExitOk;
  } catch (const Error& e) {
    return fail(exit_code_for(e.code()), e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitUsage, e.what());
  }
}

int run_synth(const GlobalOptions& global, const SynthArgs& args) {
  try {
    const SyntheticCorpus corpus =
        generate_synthetic(args.k, args.words, args.docs, args.len, global.seed);
    fs::create_directories(global.out);
    {
      auto out = open_text(global.out / "corpus.txt");
      for (const Document& doc : corpus.documents) out << doc.raw << '\n';
    }
    Json blocks = Json::array();
    for (std::size_t b = 0; b < corpus.blocks.size(); ++b) {
      blocks.push_back({{"topic", b}, {"terms", corpus.blocks[b]}});
    }
    save_json(global.out / "truth.json",
              Json{{"k", args.k},
                   {"words_per_topic", args.words},
                   {"docs_per_topic", args.docs},
                   {"doc_len", args.len},
                   {"seed", global.seed},
                   {"blocks", blocks},
                   {"doc_topic", corpus.doc_block}});
    log(global, "synth: " + std::to_string(corpus.documents.size()) +
                    " documents written to " + (global.out / "corpus.txt").string());
    return kExitOk;
  } catch (const Error& e) {
    return fail(kExitUsage, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitUsage, e.what());
  }
}

}  // namespace topicforge::cli
