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

#include "ontomerge/correspondence.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ontomerge/error.h"

namespace ontomerge {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

struct Known {
  EntityKind kind;
  const std::string* origin;
};

}  // namespace

CorrespondenceModel CorrespondenceModel::from_sets(
    std::vector<CorrespondenceSet> sets) {
  CorrespondenceModel model;
  for (auto& cs : sets) {
    if (cs.members.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "correspondence set with fewer than two members");
    }
    std::sort(cs.members.begin(), cs.members.end());
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (!(sets[i - 1].members.front() < sets[i].members.front())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "correspondence sets not ordered by smallest member");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const EntityId& m : sets[i].members) {
      if (!model.index_.emplace(m, i).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "entity '" + m.iri + "' in two correspondence sets");
      }
    }
  }
  model.sets_ = std::move(sets);
  return model;
}

std::optional<std::size_t> CorrespondenceModel::set_of(
    const EntityId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CorrespondenceModel build_model(std::span<const Ontology> ontologies,
                                std::span<const MappingFile> mappings,
                                const CorrespondenceOptions& options) {
  std::unordered_map<EntityId, Known> known;
  for (const Ontology& o : ontologies) {
    for (const auto& [id, entity] : o.entities()) {
      auto [it, inserted] = known.emplace(id, Known{entity.kind, &o.name()});
      if (!inserted && it->second.kind != entity.kind) {
        throw Error(ErrorCode::kKindMismatch,
                    "IRI '" + id.iri + "' has different kinds across sources");
      }
    }
  }

  std::vector<EntityId> nodes;
  std::unordered_map<EntityId, std::size_t> node_of;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto node = [&](const EntityId& id) {
    auto [it, inserted] = node_of.emplace(id, nodes.size());
    if (inserted) nodes.push_back(id);
    return it->second;
  };
  auto lookup = [&](const EntityId& id) -> const Known& {
    auto it = known.find(id);
    if (it == known.end()) {
      throw Error(ErrorCode::kUnknownEntity,
                  "mapping references unknown entity '" + id.iri + "'");
    }
    return it->second;
  };

  for (const MappingFile& mapping : mappings) {
    for (const MappingPair& p : mapping.pairs) {
      const Known& left = lookup(p.left);
      const Known& right = lookup(p.right);
      if (left.kind != right.kind) {
        throw Error(ErrorCode::kKindMismatch,
                    "mapping pairs " +
                        std::string(entity_kind_name(left.kind)) + " '" +
                        p.left.iri + "' with " +
                        std::string(entity_kind_name(right.kind)) + " '" +
                        p.right.iri + "'");
      }
      if (p.confidence < options.min_confidence) continue;
      if (p.left == p.right) continue;
      if (options.drop_self_mappings && *left.origin == *right.origin) {
        continue;
      }
      edges.emplace_back(node(p.left), node(p.right));
    }
  }

  DisjointSets dsu(nodes.size());
  for (auto [a, b] : edges) dsu.unite(a, b);

  std::map<std::size_t, std::vector<EntityId>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    groups[dsu.find(i)].push_back(nodes[i]);
  }
  std::vector<CorrespondenceSet> sets;
  for (auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    EntityKind kind = known.at(members.front()).kind;
    sets.push_back(CorrespondenceSet{std::move(members), kind});
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.members.front() < b.members.front();
  });
  return CorrespondenceModel::from_sets(std::move(sets));
}

std::size_t total_correspondences(const CorrespondenceModel& model) {
  std::size_t total = 0;
  for (const auto& cs : model.sets()) total += card(cs);
  return total;
}

MappingFile to_mapping(const CorrespondenceModel& model) {
  MappingFile mapping;
  for (const auto& cs : model.sets()) {
    for (std::size_t i = 1; i < cs.members.size(); ++i) {
      mapping.pairs.push_back({cs.members.front(), cs.members[i], 1.0});
    }
  }
  return mapping;
}

}  // namespace ontomerge
