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

// Deterministic synthetic datasets: tree taxonomies with properties,
// unions and instances, plus perfect and imperfect mappings.

#ifndef ONTOMERGE_FIXTURE_H_
#define ONTOMERGE_FIXTURE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ontomerge/io.h"
#include "ontomerge/ontology.h"

namespace ontomerge {

struct FixtureParams {
  std::size_t n = 5;        // ontologies, >= 2
  std::size_t size = 30;    // classes per ontology, >= 1
  double overlap = 0.3;     // fraction of classes drawn from shared concepts
  std::uint64_t seed = 1;
};

struct Fixture {
  std::vector<Ontology> ontologies;
  MappingFile perfect;
  // `perfect` with about 10% of its pairs dropped and about 5% wrong pairs
  // added.
  MappingFile imperfect;
};

// Throws kInvalidArgument on out-of-range parameters.
Fixture generate_fixture(const FixtureParams& params);

// Hand-authored five-ontology conference dataset with six correspondence
// groups; see README for the operation counts it produces.
Fixture fig1_fixture();

// Writes o<i>.onto (named after each ontology), perfect.map, imperfect.map
// and manifest.txt into `dir`, creating it if needed. Returns the ontology
// file paths in order.
std::vector<std::string> write_fixture(const Fixture& fixture,
                                       const std::string& dir);

}  // namespace ontomerge

#endif  // ONTOMERGE_FIXTURE_H_
