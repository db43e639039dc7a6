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

// Top-level merge drivers: the partition-based n-ary merge and the two
// binary baselines (ladder and balanced), with operation accounting.

#ifndef ONTOMERGE_STRATEGIES_H_
#define ONTOMERGE_STRATEGIES_H_

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontomerge/combine.h"
#include "ontomerge/correspondence.h"
#include "ontomerge/init_merge.h"
#include "ontomerge/io.h"
#include "ontomerge/partition.h"
#include "ontomerge/refine.h"

namespace ontomerge {

enum class Strategy { kNary, kLadder, kBalanced };

std::string_view strategy_name(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);

struct OpCounters {
  std::size_t combine = 0;  // integrated entities created
  std::size_t reconst = 0;  // axiom rewrites plus distributed re-attachments
  std::size_t output = 0;   // results serialized
  std::size_t cor = 0;      // corresponding entities processed
  std::size_t tr = 0;       // translated axioms
  std::size_t r_local = 0;  // local refinement actions
  std::size_t r_global = 0; // global refinement actions
  std::size_t merges = 0;   // merge processes
  std::chrono::duration<double, std::milli> wall_time{0};
};

// One row of the variant grid: which driver runs, which mapping it uses,
// and on which levels refinement is applied.
struct Variant {
  int id = 0;
  Strategy strategy = Strategy::kNary;
  bool imperfect_mapping = false;
  bool global_refinement = true;
  bool local_refinement = true;
};

inline constexpr int kVariantCount = 12;
const std::array<Variant, kVariantCount>& variant_table();
// Throws kInvalidArgument unless 1 <= id <= 12.
const Variant& variant(int id);
// Accepts "V4", "v4" or "4".
std::optional<int> parse_variant(std::string_view text);

struct StrategyConfig {
  Strategy strategy = Strategy::kNary;
  RefinementConfig refinement;
  Weights weights;
  std::optional<int> variant_id;
  int jobs = 1;  // intra-combination worker threads
};

// Returns `base` with strategy and refinement levels overridden by the
// variant.
StrategyConfig apply_variant(StrategyConfig base, int id);

struct RunResult {
  // Final ontology; integrated_of maps every source entity that was
  // replaced to its image in the final ontology.
  MergeModel model;
  OpCounters counters;
  // Partition characteristics of the last pipeline run.
  std::size_t k = 0;
  std::size_t distributed_taxonomic = 0;
  std::size_t initial_axioms = 0;   // axioms of the last initial merge model
  std::size_t translation_inputs = 0;  // axioms seen by every translation
  std::size_t acyclicity_conflicts = 0;
  // Sub-ontologies of the last pipeline run, after local refinement.
  std::vector<SubOntology> blocks;
};

// Original inputs of a multi-step merge. When handed to the last step,
// global refinement measures preservation against these sources instead of
// the step's own inputs.
struct OriginalSources {
  std::span<const Ontology> sources;
  // Source entity -> its image in the step inputs.
  const std::map<EntityId, EntityId>* image_before = nullptr;
};

// Full n-ary pipeline; `corr` must be built over `ontologies`. `ids` is
// shared so that successive runs never reuse an integrated IRI.
RunResult run_pipeline(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr,
                       const StrategyConfig& config, IdAllocator& ids,
                       const OriginalSources* originals = nullptr);

RunResult merge_nary(std::span<const Ontology> ontologies,
                     const CorrespondenceModel& corr,
                     const StrategyConfig& config);
RunResult merge_ladder(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr,
                       const StrategyConfig& config);
RunResult merge_balanced(std::span<const Ontology> ontologies,
                         const CorrespondenceModel& corr,
                         const StrategyConfig& config);
// Dispatches on config.strategy.
RunResult merge(std::span<const Ontology> ontologies,
                const CorrespondenceModel& corr, const StrategyConfig& config);

// Projects `corr` onto the entities currently present in `left` and
// `right`: every member is replaced by its current image and sets left
// with fewer than two distinct images are dropped.
CorrespondenceModel project_correspondences(
    const CorrespondenceModel& corr,
    const std::map<EntityId, EntityId>& current_image, const Ontology& left,
    const Ontology& right);

// Deterministic permutation of `ontologies` driven by `seed`.
std::vector<Ontology> shuffled(std::span<const Ontology> ontologies,
                               std::uint64_t seed);

}  // namespace ontomerge

#endif  // ONTOMERGE_STRATEGIES_H_
