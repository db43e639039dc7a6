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

#include "ontomerge/partition.h"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ontomerge/error.h"
#include "ontomerge/taxonomy.h"

namespace ontomerge {
namespace {

void check_weights(const Weights& w) {
  if (!(w.taxonomic >= 0.0) || !(w.non_taxonomic >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "weights must be non-negative");
  }
}

double weigh(const ConnectivityCounts& c, const Weights& w) {
  return w.taxonomic * static_cast<double>(c.taxonomic) +
         w.non_taxonomic * static_cast<double>(c.non_taxonomic);
}

const EntityId& integrated_class(const MergeModel& model,
                                 const CorrespondenceSet& cs) {
  const EntityId* target = nullptr;
  for (const EntityId& m : cs.members) {
    auto it = model.integrated_of.find(m);
    if (it == model.integrated_of.end() ||
        (target != nullptr && *target != it->second)) {
      throw Error(ErrorCode::kNotIntegrated,
                  "correspondence set containing '" + m.iri +
                      "' was not integrated");
    }
    target = &it->second;
  }
  if (target == nullptr || !model.ontology.contains(*target)) {
    throw Error(ErrorCode::kNotIntegrated,
                "correspondence set has no integrated entity");
  }
  return *target;
}

}  // namespace

double connectivity(const MergeModel& model, const EntityId& cls,
                    const Weights& weights) {
  check_weights(weights);
  return weigh(connectivity_counts(model.ontology, cls), weights);
}

double reputation(const MergeModel& model, const CorrespondenceSet& cs,
                  const Weights& weights) {
  const EntityId& m = integrated_class(model, cs);
  return connectivity(model, m, weights) * static_cast<double>(card(cs));
}

PivotList find_pivots(const MergeModel& model, const CorrespondenceModel& corr,
                      const Weights& weights) {
  check_weights(weights);
  AxiomIndex index(model.ontology);
  PivotList pivots;
  for (const CorrespondenceSet& cs : corr.sets()) {
    if (cs.kind != EntityKind::kClass) continue;
    const EntityId& m = integrated_class(model, cs);
    double rep =
        weigh(index.counts(m), weights) * static_cast<double>(card(cs));
    pivots.push_back(Pivot{cs, m, rep});
  }
  std::stable_sort(pivots.begin(), pivots.end(),
                   [](const Pivot& a, const Pivot& b) {
                     if (a.reputation != b.reputation) {
                       return a.reputation > b.reputation;
                     }
                     return a.set.members.front() < b.set.members.front();
                   });
  return pivots;
}

PartitionResult partition(const MergeModel& model, const PivotList& pivots) {
  ClassGraph graph(model.ontology);
  const std::size_t n = graph.size();
  std::vector<std::size_t> owner(n, 0);
  PartitionResult result;

  auto grow = [&](ClassGraph::Vertex seed) {
    Block block;
    block.id = result.blocks.size() + 1;
    std::deque<ClassGraph::Vertex> queue{seed};
    owner[seed] = block.id;
    while (!queue.empty()) {
      ClassGraph::Vertex v = queue.front();
      queue.pop_front();
      block.classes.insert(graph.id(v));
      for (const auto* adj : {&graph.supers(v), &graph.subs(v)}) {
        for (ClassGraph::Vertex w : *adj) {
          if (owner[w] == 0) {
            owner[w] = block.id;
            queue.push_back(w);
          }
        }
      }
    }
    result.blocks.push_back(std::move(block));
  };

  for (const Pivot& pivot : pivots) {
    auto v = graph.vertex(pivot.integrated);
    if (!v || owner[*v] != 0 || graph.degree(*v) == 0) continue;
    grow(*v);
  }
  result.pivot_blocks = result.blocks.size();
  for (ClassGraph::Vertex v = 0; v < n; ++v) {
    if (owner[v] != 0) continue;
    if (graph.degree(v) == 0) {
      result.unassigned_classes.insert(graph.id(v));
    } else {
      grow(v);
    }
  }
  return result;
}

double overlap_ratio(const CorrespondenceModel& corr,
                     std::span<const Ontology> sources) {
  std::unordered_set<EntityId> classes;
  for (const Ontology& o : sources) {
    for (const auto& [id, entity] : o.entities()) {
      if (entity.kind == EntityKind::kClass) classes.insert(id);
    }
  }
  if (classes.empty()) return 0.0;
  std::size_t corresponding = 0;
  for (const EntityId& id : classes) {
    if (corr.set_of(id)) ++corresponding;
  }
  return static_cast<double>(corresponding) /
         static_cast<double>(classes.size());
}

}  // namespace ontomerge
