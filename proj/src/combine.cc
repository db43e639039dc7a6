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

#include "ontomerge/combine.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <utility>

namespace ontomerge {

std::size_t DistributedAxiomSet::taxonomic() const {
  return static_cast<std::size_t>(
      std::count_if(axioms.begin(), axioms.end(), [](const Axiom& a) {
        return a.kind == AxiomKind::kSubClassOf;
      }));
}

namespace {

// Declares every non-class participant of `axiom` in `target`, taking the
// record from `lookup(id)`, then adds the axiom itself.
template <typename Lookup>
void attach(Ontology& target, const Axiom& axiom, Lookup&& lookup) {
  axiom.for_each_participant([&](const EntityId& id) {
    if (!target.contains(id)) target.upsert_entity(lookup(id));
  });
  target.add_axiom(axiom);
}

void absorb(Ontology& target, const Ontology& part) {
  for (const auto& [id, entity] : part.entities()) target.upsert_entity(entity);
  for (const Axiom& a : part.axioms()) target.add_axiom(a);
}

}  // namespace

AxiomAssignment assign_axioms(const MergeModel& model,
                              const PartitionResult& part) {
  const Ontology& merged = model.ontology;
  auto lookup = [&](const EntityId& id) -> const Entity& {
    return merged.entity(id);
  };

  AxiomAssignment out;
  out.residual.set_name("residual");
  std::map<EntityId, std::size_t> block_of;
  std::map<std::size_t, std::size_t> slot_of;
  for (const Block& b : part.blocks) {
    slot_of[b.id] = out.subs.size();
    SubOntology sub{b.id, Ontology("block_" + std::to_string(b.id))};
    for (const EntityId& c : b.classes) {
      block_of[c] = b.id;
      sub.ontology.add_entity(merged.entity(c));
    }
    out.subs.push_back(std::move(sub));
  }

  std::vector<const Axiom*> residual_axioms;
  for (const Axiom& a : merged.axioms()) {
    std::set<std::size_t> touched;
    a.for_each_participant([&](const EntityId& id) {
      if (merged.entity(id).kind != EntityKind::kClass) return;
      auto it = block_of.find(id);
      touched.insert(it == block_of.end() ? kUnassignedSpace : it->second);
    });
    bool has_block = !touched.empty() && *touched.rbegin() != kUnassignedSpace;
    if (!has_block) {
      residual_axioms.push_back(&a);
    } else if (touched.size() == 1) {
      attach(out.subs[slot_of[*touched.begin()]].ontology, a, lookup);
    } else {
      out.distributed.axioms.insert(a);
      out.distributed.touches[a] = std::move(touched);
      a.for_each_participant([&](const EntityId& id) {
        const Entity& e = merged.entity(id);
        if (e.kind != EntityKind::kClass) out.distributed.entities.emplace(id, e);
      });
    }
  }

  std::set<EntityId> placed;
  for (const SubOntology& s : out.subs) {
    for (const auto& [id, entity] : s.ontology.entities()) placed.insert(id);
  }
  for (const auto& [id, entity] : out.distributed.entities) placed.insert(id);
  for (const auto& [id, entity] : merged.entities()) {
    bool stray = entity.kind == EntityKind::kClass
                     ? part.unassigned_classes.count(id) > 0
                     : placed.count(id) == 0;
    if (stray) out.residual.add_entity(entity);
  }
  for (const Axiom* a : residual_axioms) attach(out.residual, *a, lookup);
  return out;
}

std::size_t inter_relatedness(const DistributedAxiomSet& d, std::size_t i,
                              std::size_t j) {
  std::size_t count = 0;
  for (const auto& [axiom, blocks] : d.touches) {
    if (blocks.count(i) > 0 && blocks.count(j) > 0) ++count;
  }
  return count;
}

std::vector<RefinementOutcome> intra_combine(
    std::vector<SubOntology>& subs, const RefinementConfig& config,
    const PreservationContext& context, int jobs) {
  std::vector<RefinementOutcome> outcomes(subs.size());
  std::vector<std::exception_ptr> errors(subs.size());
  auto work = [&](std::size_t i) {
    try {
      std::set<EntityId> scope;
      for (const auto& [id, entity] : subs[i].ontology.entities()) {
        if (entity.kind == EntityKind::kClass) scope.insert(id);
      }
      outcomes[i] =
          apply(config, Scope::kLocal, subs[i].ontology, context, &scope);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (jobs <= 1 || subs.size() <= 1) {
    for (std::size_t i = 0; i < subs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                          subs.size());
    for (std::size_t w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < subs.size(); i = next++) work(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

Ontology inter_combine(const std::vector<SubOntology>& subs,
                       const DistributedAxiomSet& d,
                       const PartitionResult& part, const Ontology& residual,
                       const GlobalHook& refiner, InterCombineStats* stats) {
  (void)part;
  InterCombineStats local;
  InterCombineStats& st = stats != nullptr ? *stats : local;
  Ontology result("merged");

  std::map<std::size_t, const SubOntology*> remaining;
  for (const SubOntology& s : subs) remaining.emplace(s.block_id, &s);

  // Per distributed axiom: the real blocks it still waits for.
  std::vector<const Axiom*> axioms;
  std::vector<std::size_t> missing;
  std::vector<bool> needs_residual;
  std::vector<bool> hits_group;
  std::map<std::size_t, std::vector<std::size_t>> axioms_of_block;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_rel;
  for (const auto& [axiom, blocks] : d.touches) {
    std::size_t index = axioms.size();
    axioms.push_back(&axiom);
    needs_residual.push_back(blocks.count(kUnassignedSpace) > 0);
    hits_group.push_back(false);
    std::vector<std::size_t> real;
    for (std::size_t b : blocks) {
      if (b != kUnassignedSpace) real.push_back(b);
    }
    missing.push_back(real.size());
    for (std::size_t x = 0; x < real.size(); ++x) {
      axioms_of_block[real[x]].push_back(index);
      for (std::size_t y = x + 1; y < real.size(); ++y) {
        ++pair_rel[{real[x], real[y]}];
      }
    }
  }

  auto lookup = [&](const EntityId& id) -> const Entity& {
    return d.entities.at(id);
  };
  auto add_distributed = [&](std::size_t index) {
    attach(result, *axioms[index], lookup);
    ++st.reattached;
  };

  std::map<std::size_t, std::size_t> frontier;  // block -> rel to group
  auto join = [&](std::size_t block, bool grouped) {
    absorb(result, remaining.at(block)->ontology);
    remaining.erase(block);
    frontier.erase(block);
    st.order.push_back(block);
    for (std::size_t index : axioms_of_block[block]) {
      if (--missing[index] == 0 && !needs_residual[index]) {
        add_distributed(index);
      }
      if (grouped && !hits_group[index]) {
        hits_group[index] = true;
        for (std::size_t other : d.touches.at(*axioms[index])) {
          if (remaining.count(other) > 0) ++frontier[other];
        }
      }
    }
  };

  while (!remaining.empty()) {
    if (frontier.empty()) {
      // Start a new group with the most related remaining pair.
      std::pair<std::size_t, std::size_t> best{0, 0};
      std::size_t best_rel = 0;
      for (const auto& [pair, rel] : pair_rel) {
        if (rel > best_rel && remaining.count(pair.first) > 0 &&
            remaining.count(pair.second) > 0) {
          best = pair;
          best_rel = rel;
        }
      }
      if (best_rel == 0) break;
      join(best.first, true);
      join(best.second, true);
      ++st.steps;
      continue;
    }
    auto best = frontier.begin();
    for (auto it = frontier.begin(); it != frontier.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    join(best->first, true);
    ++st.steps;
  }

  // Whatever is left is unrelated to every other block.
  while (!remaining.empty()) join(remaining.begin()->first, false);

  absorb(result, residual);
  for (std::size_t index = 0; index < axioms.size(); ++index) {
    if (needs_residual[index]) add_distributed(index);
  }
  if (refiner) refiner(result);
  return result;
}

}  // namespace ontomerge
