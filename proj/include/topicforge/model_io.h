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

#ifndef TOPICFORGE_MODEL_IO_H_
#define TOPICFORGE_MODEL_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "topicforge/eval.h"

namespace topicforge {

using Json = nlohmann::json;

// Model JSON objects, tagged by "model": "plsa" | "lsa" | "lda" | "nmf".
Json to_json(const PlsaModel& model);
Json to_json(const LsaModel& model);
Json to_json(const LdaModel& model, bool include_assignments = false);
Json to_json(const NmfModel& model);
Json to_json(const AnyModel& model);

// Throws kMalformedInput on a missing field or a shape inconsistency.
AnyModel model_from_json(const Json& json);

Json report_to_json(const ComparisonReport& report);
// Aligned columns: rank, model, k, coherence, objective, seconds, then the
// top terms of each model's topics.
std::string report_to_text(const ComparisonReport& report);

// Writes json.dump() plus a trailing newline.
void save_json(const std::filesystem::path& path, const Json& json);
Json load_json(const std::filesystem::path& path);

}  // namespace topicforge

#endif  // TOPICFORGE_MODEL_IO_H_
