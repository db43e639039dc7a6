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

// Quality metrics of a merged ontology and the text/CSV report renderers.

#ifndef ONTOMERGE_METRICS_H_
#define ONTOMERGE_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ontomerge/correspondence.h"
#include "ontomerge/ontology.h"
#include "ontomerge/refine.h"
#include "ontomerge/strategies.h"

namespace ontomerge {

struct Compactness {
  std::size_t classes = 0;
  std::size_t properties = 0;
  std::size_t instances = 0;
};

// Everything that can be measured from the final ontology, the sources and
// the source-to-image mapping alone.
struct QualityMetrics {
  Compactness compactness;
  PreservationReport preservation;  // coverage ratios and |str|
  std::size_t on = 0;    // properties with several domains or ranges
  std::size_t c_u = 0;   // classes left without taxonomic edges
  std::size_t cyc = 0;   // elementary cycles, capped at kCycleCountCap
  bool cyc_capped = false;
  std::size_t redundancy = 0;
};

QualityMetrics measure_quality(const Ontology& merged,
                               std::span<const Ontology> sources,
                               const std::map<EntityId, EntityId>& integrated_of);

// Pairs of entities sharing kind, label set and axiom neighbourhood, where
// the neighbourhood is every axiom mentioning the entity with the entity
// itself blanked out.
std::size_t count_redundancy(const Ontology& ontology);

struct MergeReport {
  std::string dataset;
  std::optional<int> variant;
  Strategy strategy = Strategy::kNary;
  OpCounters counters;
  std::size_t k = 0;
  double ds_pct = 0.0;
  double tr_pct = 0.0;
  double ov_pct = 0.0;
  std::size_t max_card = 0;
  QualityMetrics quality;
  std::size_t acyclicity_conflicts = 0;
  // Set instead of the metrics when the run failed.
  std::string error;
};

MergeReport compute_report(std::string dataset, const RunResult& run,
                           std::span<const Ontology> sources,
                           const CorrespondenceModel& corr,
                           const StrategyConfig& config);

// Post-conditions of the enabled rules that the final ontology violates;
// only checked when global refinement ran.
std::vector<std::string> gmr_violations(const MergeReport& report,
                                        const RefinementConfig& config);

std::vector<std::string> csv_columns();
std::vector<std::string> csv_fields(const MergeReport& report);
// Rows are sorted by (dataset, variant); output is byte-deterministic apart
// from the wall_ms column.
std::string render_csv(std::span<const MergeReport> reports);
std::string render_text(std::span<const MergeReport> reports);
// Side-by-side strategy comparison: |Cor|, |tr|, |R_G|, |Mer.| and time.
std::string render_comparison(std::span<const MergeReport> reports);

std::string format_fixed(double value, int decimals);

}  // namespace ontomerge

#endif  // ONTOMERGE_METRICS_H_
