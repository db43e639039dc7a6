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

// Runs every (dataset, variant) combination and collects the reports.

#ifndef ONTOMERGE_MATRIX_H_
#define ONTOMERGE_MATRIX_H_

#include <span>
#include <string>
#include <vector>

#include "ontomerge/correspondence.h"
#include "ontomerge/io.h"
#include "ontomerge/metrics.h"
#include "ontomerge/ontology.h"
#include "ontomerge/strategies.h"

namespace ontomerge {

struct Dataset {
  std::string name;
  std::vector<Ontology> ontologies;
  std::vector<MappingFile> mappings;            // perfect mapping
  std::vector<MappingFile> imperfect_mappings;  // empty: reuse `mappings`
  CorrespondenceOptions options;
};

// Correspondence model a configuration sees on `dataset`.
CorrespondenceModel dataset_model(const Dataset& dataset,
                                  const StrategyConfig& config);

// One report per (dataset, config), in dataset-major order. A failing run
// yields a report carrying the error; the remaining runs continue. Up to
// `jobs` datasets are processed concurrently.
std::vector<MergeReport> run_matrix(std::span<const Dataset> datasets,
                                    std::span<const StrategyConfig> variants,
                                    int jobs = 1);

}  // namespace ontomerge

#endif  // ONTOMERGE_MATRIX_H_
