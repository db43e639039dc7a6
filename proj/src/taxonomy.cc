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

#include "ontomerge/taxonomy.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace ontomerge {

ClassGraph::ClassGraph(const Ontology& ontology) {
  for (const auto& [id, entity] : ontology.entities()) {
    if (entity.kind != EntityKind::kClass) continue;
    index_.emplace(id, ids_.size());
    ids_.push_back(id);
  }
  out_.resize(ids_.size());
  in_.resize(ids_.size());
  for (const Axiom& a : ontology.axioms()) {
    if (a.kind != AxiomKind::kSubClassOf) continue;
    Vertex sub = index_.at(a.subject);
    Vertex super = index_.at(a.objects[0]);
    out_[sub].push_back(super);
    in_[super].push_back(sub);
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

std::optional<ClassGraph::Vertex> ClassGraph::vertex(
    const EntityId& cls) const {
  auto it = index_.find(cls);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ClassGraph::has_edge(Vertex sub, Vertex super) const {
  return std::binary_search(out_[sub].begin(), out_[sub].end(), super);
}

namespace {

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void erase_sorted(std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

void ClassGraph::add_edge(Vertex sub, Vertex super) {
  insert_sorted(out_[sub], super);
  insert_sorted(in_[super], sub);
}

void ClassGraph::remove_edge(Vertex sub, Vertex super) {
  erase_sorted(out_[sub], super);
  erase_sorted(in_[super], sub);
}

bool ClassGraph::reachable(Vertex from, Vertex to) const {
  if (from == to) return true;
  std::vector<char> seen(size(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : out_[v]) {
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<std::vector<ClassGraph::Vertex>>
ClassGraph::strongly_connected_components() const {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = size();
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  // Explicit DFS frames: (vertex, next out-edge position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < out_[v].size()) {
        Vertex w = out_[v][pos++];
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::vector<ClassGraph::Vertex> ClassGraph::find_cycle() const {
  auto components = strongly_connected_components();
  const std::vector<Vertex>* target = nullptr;
  for (const auto& c : components) {
    if (c.size() < 2) continue;
    if (target == nullptr || c.front() < target->front()) target = &c;
  }
  if (target == nullptr) return {};

  std::vector<char> member(size(), 0);
  for (Vertex v : *target) member[v] = 1;
  const Vertex start = target->front();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(size(), kNone);
  std::deque<Vertex> queue{start};
  parent[start] = start;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : out_[v]) {
      if (!member[w]) continue;
      if (w == start) {
        std::vector<Vertex> cycle;
        for (Vertex u = v; u != start; u = parent[u]) cycle.push_back(u);
        cycle.push_back(start);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] == kNone) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};  // unreachable for a non-trivial component
}

namespace {

// Johnson's circuit enumeration restricted to one strongly connected
// component, relabelled to 0..m-1.
class CycleCounter {
 public:
  CycleCounter(std::vector<std::vector<std::size_t>> adj, std::size_t cap)
      : adj_(std::move(adj)),
        cap_(cap),
        blocked_(adj_.size(), 0),
        blocked_by_(adj_.size()) {}

  std::size_t run() {
    for (start_ = 0; start_ < adj_.size() && count_ < cap_; ++start_) {
      for (std::size_t v = start_; v < adj_.size(); ++v) {
        blocked_[v] = 0;
        blocked_by_[v].clear();
      }
      circuit(start_);
    }
    return count_;
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    blocked_[v] = 1;
    for (std::size_t w : adj_[v]) {
      if (count_ >= cap_) return true;
      if (w < start_) continue;
      if (w == start_) {
        ++count_;
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (w < start_) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) {
          list.push_back(v);
        }
      }
    }
    return found;
  }

  void unblock(std::size_t u) {
    blocked_[u] = 0;
    std::vector<std::size_t> pending;
    pending.swap(blocked_by_[u]);
    for (std::size_t w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::size_t cap_;
  std::size_t count_ = 0;
  std::size_t start_ = 0;
  std::vector<char> blocked_;
  std::vector<std::vector<std::size_t>> blocked_by_;
};

}  // namespace

std::size_t ClassGraph::count_elementary_cycles(std::size_t cap,
                                                bool* capped) const {
  std::size_t total = 0;
  if (capped != nullptr) *capped = false;
  for (const auto& component : strongly_connected_components()) {
    if (component.size() < 2) continue;
    std::unordered_map<Vertex, std::size_t> local;
    for (std::size_t i = 0; i < component.size(); ++i) {
      local.emplace(component[i], i);
    }
    std::vector<std::vector<std::size_t>> adj(component.size());
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (Vertex w : out_[component[i]]) {
        auto it = local.find(w);
        if (it != local.end()) adj[i].push_back(it->second);
      }
    }
    total += CycleCounter(std::move(adj), cap - total).run();
    if (total >= cap) {
      if (capped != nullptr) *capped = true;
      return cap;
    }
  }
  return total;
}

}  // namespace ontomerge
