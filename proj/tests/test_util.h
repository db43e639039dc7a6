// Copyright 2026 The OntoMerge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the unit tests.

#ifndef ONTOMERGE_TESTS_TEST_UTIL_H_
#define ONTOMERGE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ontomerge/correspondence.h"
#include "ontomerge/io.h"
#include "ontomerge/ontology.h"

namespace ontomerge::testing {

inline std::filesystem::path fixture_path(std::string_view relative) {
  return std::filesystem::path(ONTOMERGE_FIXTURE_DIR) / relative;
}

inline EntityId id(std::string iri) { return EntityId{std::move(iri)}; }

// Parses ONTO text, so tests can state their inputs the way users write
// them.
inline Ontology onto(std::string_view text) { return parse_ontology(text); }

inline MappingFile mapping(std::string_view text) {
  return parse_mapping(text);
}

inline CorrespondenceModel model_of(const std::vector<Ontology>& sources,
                                    const std::vector<MappingFile>& maps) {
  return build_model(sources, maps);
}

// A fresh scratch directory below the system temp directory.
inline std::filesystem::path scratch_dir(std::string_view name) {
  auto dir = std::filesystem::temp_directory_path() / "ontomerge_tests" /
             std::string(name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ontomerge::testing

#endif  // ONTOMERGE_TESTS_TEST_UTIL_H_
