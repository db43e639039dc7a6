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

#include "ontomerge/matrix.h"

#include <atomic>
#include <thread>

#include "ontomerge/error.h"

namespace ontomerge {

CorrespondenceModel dataset_model(const Dataset& dataset,
                                  const StrategyConfig& config) {
  bool imperfect = config.variant_id && variant(*config.variant_id).imperfect_mapping &&
                   !dataset.imperfect_mappings.empty();
  return build_model(dataset.ontologies,
                     imperfect ? dataset.imperfect_mappings : dataset.mappings,
                     dataset.options);
}

std::vector<MergeReport> run_matrix(std::span<const Dataset> datasets,
                                    std::span<const StrategyConfig> variants,
                                    int jobs) {
  std::vector<MergeReport> reports(datasets.size() * variants.size());
  auto run_dataset = [&](std::size_t d) {
    for (std::size_t v = 0; v < variants.size(); ++v) {
      MergeReport& report = reports[d * variants.size() + v];
      const StrategyConfig& config = variants[v];
      try {
        CorrespondenceModel corr = dataset_model(datasets[d], config);
        RunResult run = merge(datasets[d].ontologies, corr, config);
        report = compute_report(datasets[d].name, run, datasets[d].ontologies,
                                corr, config);
      } catch (const Error& e) {
        report.dataset = datasets[d].name;
        report.variant = config.variant_id;
        report.strategy = config.strategy;
        report.error = e.what();
      }
    }
  };

  if (jobs <= 1 || datasets.size() <= 1) {
    for (std::size_t d = 0; d < datasets.size(); ++d) run_dataset(d);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                          datasets.size());
    for (std::size_t w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (std::size_t d = next++; d < datasets.size(); d = next++) {
          run_dataset(d);
        }
      });
    }
  }
  return reports;
}

}  // namespace ontomerge
