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

#include "topicforge/model_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "topicforge/error.h"

namespace topicforge {
namespace {

Json matrix_json(const RowMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

const Json& field(const Json& json, const char* name) {
  auto it = json.find(name);
  if (it == json.end()) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("model JSON has no '") + name + "' field");
  }
  return *it;
}

RowMatrix matrix_from(const Json& json, const char* name) {
  const Json& rows = field(json, name);
  if (!rows.is_array()) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("'") + name + "' is not an array of rows");
  }
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols =
      n_rows > 0 ? static_cast<Eigen::Index>(rows.front().size()) : 0;
  RowMatrix m(n_rows, n_cols);
  for (Eigen::Index r = 0; r < n_rows; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw Error(ErrorCode::kMalformedInput,
                  std::string("'") + name + "' has ragged rows");
    }
    for (Eigen::Index c = 0; c < n_cols; ++c) {
      m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
  }
  return m;
}

Vector vector_from(const Json& json, const char* name) {
  const auto values = field(json, name).get<std::vector<double>>();
  return Eigen::Map<const Vector>(values.data(),
                                  static_cast<Eigen::Index>(values.size()));
}

void check_k(const Json& json, std::size_t k) {
  if (field(json, "k").get<std::size_t>() != k) {
    throw Error(ErrorCode::kMalformedInput,
                "'k' disagrees with the factor shapes");
  }
}

}  // namespace

Json to_json(const PlsaModel& model) {
  return Json{{"model", "plsa"},
              {"k", model.k()},
              {"p_z_given_d", matrix_json(model.p_z_given_d)},
              {"p_w_given_z", matrix_json(model.p_w_given_z)},
              {"p_d", vector_json(model.p_d)},
              {"loglik_trace", model.loglik_trace},
              {"iterations_run", model.iterations_run},
              {"converged", model.converged}};
}

Json to_json(const LsaModel& model) {
  return Json{{"model", "lsa"},
              {"k", model.k()},
              {"singular_values", vector_json(model.singular_values)},
              {"term_factors", matrix_json(model.term_factors)},
              {"doc_factors", matrix_json(model.doc_factors)},
              {"explained_variance", explained_variance(model)},
              {"total_variance", model.total_variance}};
}

Json to_json(const LdaModel& model, bool include_assignments) {
  Json json{{"model", "lda"},
            {"k", model.k()},
            {"alpha", model.alpha},
            {"beta", model.beta},
            {"phi", matrix_json(model.phi)},
            {"theta", matrix_json(model.theta)},
            {"loglik_trace", model.loglik_trace}};
  if (include_assignments) json["assignments"] = model.assignments;
  return json;
}

Json to_json(const NmfModel& model) {
  return Json{{"model", "nmf"},
              {"k", model.k()},
              {"W", matrix_json(model.w_factor)},
              {"H", matrix_json(model.h_factor)},
              {"objective_trace", model.objective_trace},
              {"iterations_run", model.iterations_run},
              {"converged", model.converged}};
}

Json to_json(const AnyModel& model) {
  return std::visit([](const auto& m) { return to_json(m); }, model);
}

AnyModel model_from_json(const Json& json) {
  try {
    const std::string kind = field(json, "model").get<std::string>();
    if (kind == "plsa") {
      PlsaModel m;
      m.p_z_given_d = matrix_from(json, "p_z_given_d");
      m.p_w_given_z = matrix_from(json, "p_w_given_z");
      m.p_d = vector_from(json, "p_d");
      m.loglik_trace = field(json, "loglik_trace").get<std::vector<double>>();
      m.iterations_run = json.value("iterations_run", std::size_t{0});
      m.converged = json.value("converged", false);
      check_k(json, m.k());
      if (m.p_z_given_d.cols() != m.p_w_given_z.rows() ||
          m.p_d.size() != m.p_z_given_d.rows() || m.loglik_trace.empty()) {
        throw Error(ErrorCode::kMalformedInput, "inconsistent pLSA shapes");
      }
      return m;
    }
    if (kind == "lsa") {
      LsaModel m;
      m.singular_values = vector_from(json, "singular_values");
      m.term_factors = matrix_from(json, "term_factors");
      m.doc_factors = matrix_from(json, "doc_factors");
      m.total_variance = field(json, "total_variance").get<double>();
      check_k(json, m.k());
      if (m.term_factors.rows() != m.singular_values.size() ||
          m.doc_factors.cols() != m.singular_values.size()) {
        throw Error(ErrorCode::kMalformedInput, "inconsistent LSA shapes");
      }
      return m;
    }
    if (kind == "lda") {
      LdaModel m;
      m.alpha = field(json, "alpha").get<double>();
      m.beta = field(json, "beta").get<double>();
      m.phi = matrix_from(json, "phi");
      m.theta = matrix_from(json, "theta");
      m.loglik_trace = field(json, "loglik_trace").get<std::vector<double>>();
      if (json.contains("assignments")) {
        m.assignments = json["assignments"].get<std::vector<std::uint32_t>>();
      }
      check_k(json, m.k());
      if (m.theta.cols() != m.phi.rows() || m.loglik_trace.empty()) {
        throw Error(ErrorCode::kMalformedInput, "inconsistent LDA shapes");
      }
      return m;
    }
    if (kind == "nmf") {
      NmfModel m;
      m.w_factor = matrix_from(json, "W");
      m.h_factor = matrix_from(json, "H");
      m.objective_trace =
          field(json, "objective_trace").get<std::vector<double>>();
      m.iterations_run = json.value("iterations_run", std::size_t{0});
      m.converged = json.value("converged", false);
      check_k(json, m.k());
      if (m.w_factor.cols() != m.h_factor.rows() || m.objective_trace.empty()) {
        throw Error(ErrorCode::kMalformedInput, "inconsistent NMF shapes");
      }
      return m;
    }
    throw Error(ErrorCode::kMalformedInput, "unknown model kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

Json report_to_json(const ComparisonReport& report) {
  Json rows = Json::array();
  for (const ComparisonRow& row : report.rows) {
    Json topics = Json::array();
    for (const TopicSummary& summary : row.topics) {
      Json terms = Json::array();
      for (const TermWeight& tw : summary.top_terms) {
        terms.push_back({{"term", tw.term}, {"weight", tw.weight}});
      }
      topics.push_back({{"topic_id", summary.topic_id}, {"top_terms", terms}});
    }
    rows.push_back({{"model", row.model},
                    {"k", row.k},
                    {"mean_coherence", row.mean_coherence},
                    {"topic_coherence", row.topic_coherence},
                    {"objective_kind", row.objective.kind},
                    {"objective", row.objective.value},
                    {"fit_seconds", row.fit_seconds},
                    {"topics", topics}});
  }
  return Json{{"rows", rows}};
}

std::string report_to_text(const ComparisonReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-4s %-6s %4s %16s %-22s %24s %12s\n",
                "rank", "model", "k", "mean_coherence", "objective_kind",
                "objective", "seconds");
  out << line;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ComparisonRow& row = report.rows[i];
    std::snprintf(line, sizeof(line), "%-4zu %-6s %4zu %16.6f %-22s %24.10g %12.3f\n",
                  i + 1, row.model.c_str(), row.k, row.mean_coherence,
                  row.objective.kind.c_str(), row.objective.value,
                  row.fit_seconds);
    out << line;
  }
  for (const ComparisonRow& row : report.rows) {
    out << '\n' << row.model << " topics\n";
    for (std::size_t z = 0; z < row.topics.size(); ++z) {
      std::snprintf(line, sizeof(line), "  %3zu %10.4f  ", row.topics[z].topic_id,
                    row.topic_coherence[z]);
      out << line;
      const auto& terms = row.topics[z].top_terms;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << (i ? ", " : "") << terms[i].term;
      }
      out << '\n';
    }
  }
  return out.str();
}

void save_json(const std::filesystem::path& path, const Json& json) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write '" + path.string() + "'");
  }
  out << json.dump() << '\n';
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput,
                "'" + path.string() + "': " + e.what());
  }
}

}  // namespace topicforge
