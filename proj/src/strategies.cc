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

#include "ontomerge/strategies.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "ontomerge/error.h"

namespace ontomerge {

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kNary: return "nary";
    case Strategy::kLadder: return "ladder";
    case Strategy::kBalanced: return "balanced";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::kNary, Strategy::kLadder, Strategy::kBalanced}) {
    if (strategy_name(s) == text) return s;
  }
  return std::nullopt;
}

const std::array<Variant, kVariantCount>& variant_table() {
  static const std::array<Variant, kVariantCount> kTable = {{
      {1, Strategy::kNary, false, true, true},
      {2, Strategy::kNary, false, true, false},
      {3, Strategy::kNary, false, false, false},
      {4, Strategy::kNary, true, true, true},
      {5, Strategy::kNary, true, true, false},
      {6, Strategy::kNary, true, false, false},
      {7, Strategy::kBalanced, true, true, true},
      {8, Strategy::kBalanced, true, true, false},
      {9, Strategy::kBalanced, true, false, false},
      {10, Strategy::kLadder, true, true, true},
      {11, Strategy::kLadder, true, true, false},
      {12, Strategy::kLadder, true, false, false},
  }};
  return kTable;
}

const Variant& variant(int id) {
  if (id < 1 || id > kVariantCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "variant must be V1..V12, got " + std::to_string(id));
  }
  return variant_table()[static_cast<std::size_t>(id - 1)];
}

std::optional<int> parse_variant(std::string_view text) {
  if (!text.empty() && (text.front() == 'V' || text.front() == 'v')) {
    text.remove_prefix(1);
  }
  if (text.empty() || text.size() > 2) return std::nullopt;
  int id = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    id = id * 10 + (c - '0');
  }
  if (id < 1 || id > kVariantCount) return std::nullopt;
  return id;
}

StrategyConfig apply_variant(StrategyConfig base, int id) {
  const Variant& v = variant(id);
  base.strategy = v.strategy;
  base.refinement.apply_global = v.global_refinement;
  base.refinement.apply_local = v.local_refinement;
  base.variant_id = id;
  return base;
}

RunResult run_pipeline(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr,
                       const StrategyConfig& config, IdAllocator& ids,
                       const OriginalSources* originals) {
  InitStats init;
  MergeModel initial = naive_merge(ontologies, corr, ids, &init);
  PartitionResult part =
      partition(initial, find_pivots(initial, corr, config.weights));
  AxiomAssignment assignment = assign_axioms(initial, part);
  PreservationContext context(ontologies, initial.integrated_of,
                              &initial.ontology);

  std::vector<RefinementOutcome> local = intra_combine(
      assignment.subs, config.refinement, context, config.jobs);

  std::map<EntityId, EntityId> composed;
  std::optional<PreservationContext> original_context;
  if (originals != nullptr) {
    for (const auto& [source, image] : *originals->image_before) {
      auto it = initial.integrated_of.find(image);
      const EntityId& now = it == initial.integrated_of.end() ? image : it->second;
      if (now != source) composed.emplace(source, now);
    }
    original_context.emplace(originals->sources, composed, &initial.ontology);
  }
  const PreservationContext& global_context =
      original_context ? *original_context : context;

  RunResult result;
  GlobalHook global = [&](Ontology& merged) {
    RefinementOutcome outcome =
        apply(config.refinement, Scope::kGlobal, merged, global_context);
    result.counters.r_global = outcome.actions.size();
    result.acyclicity_conflicts = outcome.acyclicity_conflicts;
  };
  InterCombineStats inter;
  result.model.ontology =
      inter_combine(assignment.subs, assignment.distributed, part,
                    assignment.residual, global, &inter);
  result.model.integrated_of = initial.integrated_of;
  result.model.sources = initial.sources;

  OpCounters& c = result.counters;
  c.combine = init.combine;
  c.tr = init.translated;
  c.reconst = init.translated + inter.reattached;
  c.cor = total_correspondences(corr);
  for (const RefinementOutcome& o : local) c.r_local += o.actions.size();
  c.output = 1;
  c.merges = 1;

  result.k = part.k();
  result.distributed_taxonomic = assignment.distributed.taxonomic();
  result.initial_axioms = initial.ontology.axioms().size();
  result.translation_inputs = init.input_axioms;
  result.blocks = std::move(assignment.subs);
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

// Drives a sequence of two-input pipeline runs and keeps the mapping from
// every source entity to its image in the latest intermediate result.
class BinaryDriver {
 public:
  BinaryDriver(std::span<const Ontology> sources,
               const CorrespondenceModel& corr, const StrategyConfig& config)
      : sources_(sources), corr_(corr), config_(config) {
    for (const Ontology& o : sources) {
      names_.push_back(o.name());
      for (const auto& [id, entity] : o.entities()) image_.emplace(id, id);
    }
  }

  // The last step refines against the original sources.
  Ontology step(const Ontology& left, const Ontology& right, bool last) {
    CorrespondenceModel local =
        project_correspondences(corr_, image_, left, right);
    std::vector<Ontology> inputs{left, right};
    OriginalSources originals{sources_, &image_};
    RunResult run = run_pipeline(inputs, local, config_, ids_,
                                 last ? &originals : nullptr);
    for (auto& [source, image] : image_) {
      auto it = run.model.integrated_of.find(image);
      if (it != run.model.integrated_of.end()) image = it->second;
    }
    OpCounters& c = last_.counters;
    c.combine += run.counters.combine;
    c.reconst += run.counters.reconst;
    c.cor += run.counters.cor;
    c.tr += run.counters.tr;
    c.r_local += run.counters.r_local;
    c.r_global += run.counters.r_global;
    c.output += 1;
    c.merges += 1;
    translation_inputs_ += run.translation_inputs;
    last_.k = run.k;
    last_.distributed_taxonomic = run.distributed_taxonomic;
    last_.initial_axioms = run.initial_axioms;
    last_.acyclicity_conflicts = run.acyclicity_conflicts;
    last_.blocks = std::move(run.blocks);
    Ontology out = std::move(run.model.ontology);
    out.set_name("step-" + std::to_string(c.merges));
    return out;
  }

  RunResult finish(Ontology final_ontology) {
    final_ontology.set_name("merged");
    last_.model.ontology = std::move(final_ontology);
    for (const auto& [source, image] : image_) {
      if (source != image) last_.model.integrated_of.emplace(source, image);
    }
    last_.model.sources = names_;
    last_.translation_inputs = translation_inputs_;
    return std::move(last_);
  }

 private:
  std::span<const Ontology> sources_;
  const CorrespondenceModel& corr_;
  const StrategyConfig& config_;
  IdAllocator ids_;
  std::map<EntityId, EntityId> image_;
  std::vector<std::string> names_;
  std::size_t translation_inputs_ = 0;
  RunResult last_;
};

void require_binary_input(std::span<const Ontology> ontologies) {
  if (ontologies.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "binary strategies need at least 2 ontologies");
  }
}

}  // namespace

RunResult merge_nary(std::span<const Ontology> ontologies,
                     const CorrespondenceModel& corr,
                     const StrategyConfig& config) {
  if (ontologies.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to merge");
  }
  auto start = Clock::now();
  IdAllocator ids;
  RunResult result = run_pipeline(ontologies, corr, config, ids);
  result.counters.wall_time = Clock::now() - start;
  return result;
}

RunResult merge_ladder(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr,
                       const StrategyConfig& config) {
  require_binary_input(ontologies);
  auto start = Clock::now();
  BinaryDriver driver(ontologies, corr, config);
  const std::size_t n = ontologies.size();
  Ontology acc = driver.step(ontologies[0], ontologies[1], n == 2);
  for (std::size_t i = 2; i < n; ++i) {
    acc = driver.step(acc, ontologies[i], i + 1 == n);
  }
  RunResult result = driver.finish(std::move(acc));
  result.counters.wall_time = Clock::now() - start;
  return result;
}

RunResult merge_balanced(std::span<const Ontology> ontologies,
                         const CorrespondenceModel& corr,
                         const StrategyConfig& config) {
  require_binary_input(ontologies);
  auto start = Clock::now();
  BinaryDriver driver(ontologies, corr, config);
  std::vector<Ontology> level(ontologies.begin(), ontologies.end());
  while (level.size() > 1) {
    std::vector<Ontology> next;
    for (std::size_t i = 0; i < level.size(); i += 2) {
      if (i + 1 < level.size()) {
        next.push_back(
            driver.step(level[i], level[i + 1], level.size() == 2));
      } else {
        next.push_back(std::move(level[i]));
      }
    }
    level = std::move(next);
  }
  RunResult result = driver.finish(std::move(level.front()));
  result.counters.wall_time = Clock::now() - start;
  return result;
}

RunResult merge(std::span<const Ontology> ontologies,
                const CorrespondenceModel& corr, const StrategyConfig& config) {
  switch (config.strategy) {
    case Strategy::kNary: return merge_nary(ontologies, corr, config);
    case Strategy::kLadder: return merge_ladder(ontologies, corr, config);
    case Strategy::kBalanced: return merge_balanced(ontologies, corr, config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
}

CorrespondenceModel project_correspondences(
    const CorrespondenceModel& corr,
    const std::map<EntityId, EntityId>& current_image, const Ontology& left,
    const Ontology& right) {
  std::vector<CorrespondenceSet> sets;
  for (const CorrespondenceSet& cs : corr.sets()) {
    std::set<EntityId> images;
    for (const EntityId& m : cs.members) {
      auto it = current_image.find(m);
      const EntityId& img = it == current_image.end() ? m : it->second;
      if (left.contains(img) || right.contains(img)) images.insert(img);
    }
    if (images.size() >= 2) {
      sets.push_back({{images.begin(), images.end()}, cs.kind});
    }
  }
  std::sort(sets.begin(), sets.end(),
            [](const CorrespondenceSet& a, const CorrespondenceSet& b) {
              return a.members.front() < b.members.front();
            });
  return CorrespondenceModel::from_sets(std::move(sets));
}

std::vector<Ontology> shuffled(std::span<const Ontology> ontologies,
                               std::uint64_t seed) {
  std::vector<std::size_t> order(ontologies.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Ontology> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(ontologies[i]);
  return out;
}

}  // namespace ontomerge
