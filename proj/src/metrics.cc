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

#include "ontomerge/metrics.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>
#include <utility>

namespace ontomerge {

std::string format_fixed(double value, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

QualityMetrics measure_quality(
    const Ontology& merged, std::span<const Ontology> sources,
    const std::map<EntityId, EntityId>& integrated_of) {
  QualityMetrics q;
  q.compactness.classes = merged.count(EntityKind::kClass);
  q.compactness.properties = merged.count(EntityKind::kObjectProperty) +
                             merged.count(EntityKind::kDataProperty);
  q.compactness.instances = merged.count(EntityKind::kInstance);
  PreservationContext context(sources, integrated_of, nullptr);
  q.preservation = check_preservation(merged, context);
  q.on = count_oneness_violations(merged);
  q.c_u = count_unconnected(merged, context);
  q.cyc = count_cycles(merged, &q.cyc_capped);
  q.redundancy = count_redundancy(merged);
  return q;
}

std::size_t count_redundancy(const Ontology& ontology) {
  std::map<EntityId, std::vector<std::string>> neighbourhood;
  for (const Axiom& a : ontology.axioms()) {
    std::set<EntityId> participants;
    a.for_each_participant([&](const EntityId& id) { participants.insert(id); });
    for (const EntityId& self : participants) {
      std::string text(axiom_kind_name(a.kind));
      a.for_each_participant([&](const EntityId& id) {
        text += ' ';
        text += id == self ? "*" : id.iri;
      });
      neighbourhood[self].push_back(std::move(text));
    }
  }
  using Key = std::tuple<EntityKind, std::set<std::string>,
                         std::vector<std::string>>;
  std::map<Key, std::size_t> groups;
  for (const auto& [id, entity] : ontology.entities()) {
    std::vector<std::string> n;
    if (auto it = neighbourhood.find(id); it != neighbourhood.end()) {
      n = std::move(it->second);
    }
    std::sort(n.begin(), n.end());
    ++groups[Key{entity.kind, entity.labels, std::move(n)}];
  }
  std::size_t pairs = 0;
  for (const auto& [key, size] : groups) pairs += size * (size - 1) / 2;
  return pairs;
}

namespace {

double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0
                    : 100.0 * static_cast<double>(part) /
                          static_cast<double>(whole);
}

std::string variant_label(const std::optional<int>& v) {
  return v ? "V" + std::to_string(*v) : "-";
}

}  // namespace

MergeReport compute_report(std::string dataset, const RunResult& run,
                           std::span<const Ontology> sources,
                           const CorrespondenceModel& corr,
                           const StrategyConfig& config) {
  MergeReport r;
  r.dataset = std::move(dataset);
  r.variant = config.variant_id;
  r.strategy = config.strategy;
  r.counters = run.counters;
  r.k = run.k;
  r.ds_pct = percent(run.distributed_taxonomic, run.initial_axioms);
  r.tr_pct = percent(run.counters.tr, run.translation_inputs);
  r.ov_pct = 100.0 * overlap_ratio(corr, sources);
  for (const CorrespondenceSet& cs : corr.sets()) {
    r.max_card = std::max(r.max_card, card(cs));
  }
  r.quality = measure_quality(run.model.ontology, sources,
                              run.model.integrated_of);
  r.acyclicity_conflicts = run.acyclicity_conflicts;
  return r;
}

std::vector<std::string> gmr_violations(const MergeReport& report,
                                        const RefinementConfig& config) {
  std::vector<std::string> out;
  if (!config.apply_global || !report.error.empty()) return out;
  const QualityMetrics& q = report.quality;
  auto check = [&](Rule rule, bool violated, const std::string& what) {
    if (config.enabled(rule) && violated) {
      out.push_back(std::string(rule_name(rule)) + ": " + what);
    }
  };
  check(Rule::kR1, q.preservation.class_coverage < 1.0,
        "class coverage " + format_fixed(q.preservation.class_coverage, 4));
  check(Rule::kR2, q.preservation.property_coverage < 1.0,
        "property coverage " +
            format_fixed(q.preservation.property_coverage, 4));
  check(Rule::kR3, q.preservation.instance_coverage < 1.0,
        "instance coverage " +
            format_fixed(q.preservation.instance_coverage, 4));
  check(Rule::kR7,
        q.preservation.unpreserved_structures > 0 &&
            report.acyclicity_conflicts == 0,
        std::to_string(q.preservation.unpreserved_structures) +
            " unpreserved structures");
  check(Rule::kR15, q.on > 0, std::to_string(q.on) + " oneness violations");
  check(Rule::kR16, q.cyc > 0, std::to_string(q.cyc) + " cycles");
  check(Rule::kR19, q.c_u > 0 && report.acyclicity_conflicts == 0,
        std::to_string(q.c_u) + " unconnected classes");
  return out;
}

std::vector<std::string> csv_columns() {
  return {"dataset", "variant",  "strategy", "k",        "combine",
          "reconst", "output",   "cor",      "tr",       "ds_pct",
          "tr_pct",  "ov_pct",   "max_card", "class_cov", "prop_cov",
          "inst_cov", "str",     "on",       "c_u",      "cyc",
          "r_local", "r_global", "merges",   "wall_ms"};
}

std::vector<std::string> csv_fields(const MergeReport& r) {
  auto n = [](std::size_t v) { return std::to_string(v); };
  const OpCounters& c = r.counters;
  const QualityMetrics& q = r.quality;
  return {r.dataset,
          variant_label(r.variant),
          std::string(strategy_name(r.strategy)),
          n(r.k),
          n(c.combine),
          n(c.reconst),
          n(c.output),
          n(c.cor),
          n(c.tr),
          format_fixed(r.ds_pct, 2),
          format_fixed(r.tr_pct, 2),
          format_fixed(r.ov_pct, 2),
          n(r.max_card),
          format_fixed(q.preservation.class_coverage, 4),
          format_fixed(q.preservation.property_coverage, 4),
          format_fixed(q.preservation.instance_coverage, 4),
          n(q.preservation.unpreserved_structures),
          n(q.on),
          n(q.c_u),
          n(q.cyc),
          n(c.r_local),
          n(c.r_global),
          n(c.merges),
          format_fixed(c.wall_time.count(), 3)};
}

namespace {

std::vector<const MergeReport*> sorted_reports(
    std::span<const MergeReport> reports) {
  std::vector<const MergeReport*> out;
  for (const MergeReport& r : reports) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return std::make_pair(a->dataset, a->variant.value_or(0)) <
           std::make_pair(b->dataset, b->variant.value_or(0));
  });
  return out;
}

std::string join(const std::vector<std::string>& fields, char sep) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += sep;
    line += fields[i];
  }
  return line;
}

}  // namespace

std::string render_csv(std::span<const MergeReport> reports) {
  std::string out = join(csv_columns(), ',') + "\n";
  for (const MergeReport* r : sorted_reports(reports)) {
    if (!r->error.empty()) continue;
    out += join(csv_fields(*r), ',') + "\n";
  }
  return out;
}

std::string render_text(std::span<const MergeReport> reports) {
  std::ostringstream os;
  for (const MergeReport* r : sorted_reports(reports)) {
    os << "== " << r->dataset << " " << variant_label(r->variant) << " "
       << strategy_name(r->strategy) << " ==\n";
    if (!r->error.empty()) {
      os << "error: " << r->error << "\n\n";
      continue;
    }
    const OpCounters& c = r->counters;
    const QualityMetrics& q = r->quality;
    os << "operations: combine=" << c.combine << " reconst=" << c.reconst
       << " output=" << c.output << " merges=" << c.merges << "\n"
       << "correspondences: cor=" << c.cor << " max_card=" << r->max_card
       << " ov%=" << format_fixed(r->ov_pct, 2) << "\n"
       << "translation: tr=" << c.tr << " tr%=" << format_fixed(r->tr_pct, 2)
       << "\n"
       << "partition: k=" << r->k << " ds%=" << format_fixed(r->ds_pct, 2)
       << "\n"
       << "compactness: classes=" << q.compactness.classes
       << " properties=" << q.compactness.properties
       << " instances=" << q.compactness.instances << "\n"
       << "coverage: classes="
       << format_fixed(q.preservation.class_coverage, 4)
       << " properties=" << format_fixed(q.preservation.property_coverage, 4)
       << " instances=" << format_fixed(q.preservation.instance_coverage, 4)
       << "\n"
       << "integrity: str=" << q.preservation.unpreserved_structures
       << " on=" << q.on << " c_u=" << q.c_u << " cyc=" << q.cyc
       << (q.cyc_capped ? " (capped)" : "")
       << " redundancy=" << q.redundancy << "\n"
       << "refinement: r_local=" << c.r_local << " r_global=" << c.r_global
       << " acyclicity_conflicts=" << r->acyclicity_conflicts << "\n"
       << "wall_ms: " << format_fixed(c.wall_time.count(), 3) << "\n\n";
  }
  return os.str();
}

std::string render_comparison(std::span<const MergeReport> reports) {
  std::ostringstream os;
  os << "strategy  combine  reconst  output  cor  tr  r_global  merges  "
        "wall_ms\n";
  for (const MergeReport& r : reports) {
    const OpCounters& c = r.counters;
    os << strategy_name(r.strategy) << "  " << c.combine << "  " << c.reconst
       << "  " << c.output << "  " << c.cor << "  " << c.tr << "  "
       << c.r_global << "  " << c.merges << "  "
       << format_fixed(c.wall_time.count(), 3) << "\n";
  }
  return os.str();
}

}  // namespace ontomerge
