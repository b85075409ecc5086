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

#ifndef TOPICFORGE_PORTER_STEMMER_H_
#define TOPICFORGE_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace topicforge {

// Porter (1980) suffix-stripping stemmer, matching the behaviour of Martin
// Porter's reference C implementation: words of length <= 2 are returned
// unchanged, and step 2 uses "bli"->"ble" and "logi"->"log". Input is
// expected to be lowercase ASCII; other bytes are treated as consonants.
std::string porter_stem(std::string_view word);

}  // namespace topicforge

#endif  // TOPICFORGE_PORTER_STEMMER_H_
