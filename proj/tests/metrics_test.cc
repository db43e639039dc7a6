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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ontomerge/fixture.h"
#include "oracles.h"
#include "test_util.h"

namespace ontomerge {
namespace {

using ::ontomerge::testing::onto;
using ::testing::HasSubstr;

StrategyConfig no_refinement() {
  StrategyConfig c;
  c.refinement.apply_local = false;
  c.refinement.apply_global = false;
  return c;
}

TEST(FormatFixedTest, Decimals) {
  EXPECT_EQ(format_fixed(5.0, 2), "5.00");
  EXPECT_EQ(format_fixed(0.123456, 4), "0.1235");
  EXPECT_EQ(format_fixed(12.5, 3), "12.500");
}

TEST(MeasureQualityTest, IdentityMergeIsClean) {
  std::vector<Ontology> sources{
      onto("ONTOLOGY a\nCLASS a:X\nCLASS a:Y\nOBJPROP a:p\nINSTANCE a:i\n"
           "SUBCLASS a:X a:Y\nDOMAIN a:p a:X\nTYPE a:i a:X\n")};
  RunResult run = merge(sources, CorrespondenceModel{}, StrategyConfig{});
  MergeReport r = compute_report("id", run, sources, CorrespondenceModel{},
                                 StrategyConfig{});
  const QualityMetrics& q = r.quality;
  EXPECT_DOUBLE_EQ(q.preservation.class_coverage, 1.0);
  EXPECT_DOUBLE_EQ(q.preservation.property_coverage, 1.0);
  EXPECT_DOUBLE_EQ(q.preservation.instance_coverage, 1.0);
  EXPECT_EQ(q.preservation.unpreserved_structures, 0u);
  EXPECT_EQ(q.on, 0u);
  EXPECT_EQ(q.c_u, 0u);
  EXPECT_EQ(q.cyc, 0u);
  EXPECT_EQ(q.redundancy, 0u);
  EXPECT_EQ(q.compactness.classes, 2u);
  EXPECT_EQ(q.compactness.properties, 1u);
  EXPECT_EQ(q.compactness.instances, 1u);
  EXPECT_EQ(r.ov_pct, 0.0);
}

TEST(ComputeReportTest, PercentageArithmetic) {
  RunResult run;
  run.distributed_taxonomic = 2;
  run.initial_axioms = 40;
  run.counters.tr = 3;
  run.translation_inputs = 12;
  MergeReport r = compute_report("d", run, {}, CorrespondenceModel{},
                                 StrategyConfig{});
  EXPECT_DOUBLE_EQ(r.ds_pct, 5.0);
  EXPECT_DOUBLE_EQ(r.tr_pct, 25.0);

  RunResult empty;
  EXPECT_EQ(compute_report("e", empty, {}, CorrespondenceModel{},
                           StrategyConfig{})
                .ds_pct,
            0.0);
}

// Recomputes every quality metric of the fig1 n-ary run without refinement
// by direct enumeration.
TEST(ComputeReportTest, Fig1MatchesIndependentRecount) {
  Fixture fx = fig1_fixture();
  auto corr = build_model(fx.ontologies, std::vector<MappingFile>{fx.perfect});
  RunResult run = merge(fx.ontologies, corr, no_refinement());
  MergeReport r =
      compute_report("fig1", run, fx.ontologies, corr, no_refinement());
  const Ontology& m = run.model.ontology;
  auto image = [&](const EntityId& e) {
    auto it = run.model.integrated_of.find(e);
    return it == run.model.integrated_of.end() ? e : it->second;
  };

  std::map<EntityKind, std::set<EntityId>> seen, kept;
  std::size_t str = 0;
  std::set<EntityId> had_edge;
  oracle::Closure closure(m);
  for (const Ontology& o : fx.ontologies) {
    for (const auto& [key, e] : o.entities()) {
      EntityKind k = is_property(e.kind) ? EntityKind::kObjectProperty : e.kind;
      seen[k].insert(key);
      if (m.contains(image(key))) kept[k].insert(key);
    }
    for (const Axiom& a : o.axioms()) {
      if (a.kind != AxiomKind::kSubClassOf) continue;
      EntityId s = image(a.subject), t = image(a.objects[0]);
      if (s == t) continue;
      had_edge.insert(s);
      had_edge.insert(t);
      if (!closure.reaches(s.iri, t.iri)) ++str;
    }
  }
  auto ratio = [&](EntityKind k) {
    return seen[k].empty() ? 1.0
                           : static_cast<double>(kept[k].size()) /
                                 static_cast<double>(seen[k].size());
  };
  std::size_t on = 0;
  std::map<EntityId, int> domains, ranges;
  for (const Axiom& a : m.axioms()) {
    if (a.kind == AxiomKind::kDomain) ++domains[a.subject];
    if (a.kind == AxiomKind::kRange) ++ranges[a.subject];
  }
  for (const auto& [key, e] : m.entities()) {
    if (domains[key] > 1 || ranges[key] > 1) ++on;
  }
  std::size_t c_u = 0;
  for (const EntityId& c : had_edge) {
    if (m.contains(c) && connectivity_counts(m, c).taxonomic == 0) ++c_u;
  }

  const QualityMetrics& q = r.quality;
  EXPECT_DOUBLE_EQ(q.preservation.class_coverage, ratio(EntityKind::kClass));
  EXPECT_DOUBLE_EQ(q.preservation.property_coverage,
                   ratio(EntityKind::kObjectProperty));
  EXPECT_DOUBLE_EQ(q.preservation.instance_coverage,
                   ratio(EntityKind::kInstance));
  EXPECT_EQ(q.preservation.unpreserved_structures, str);
  EXPECT_EQ(q.on, on);
  EXPECT_EQ(q.c_u, c_u);
  EXPECT_EQ(q.cyc, oracle::count_simple_cycles(m));
  EXPECT_EQ(q.compactness.classes, m.count(EntityKind::kClass));
  EXPECT_EQ(r.k, run.k);
  EXPECT_EQ(r.max_card, 5u);
  EXPECT_EQ(r.counters.combine, 6u);
  EXPECT_EQ(q.redundancy, 0u);
}

TEST(CountRedundancyTest, SameLabelsAndNeighbourhood) {
  Ontology o = onto(
      "ONTOLOGY a\nCLASS a:Top\nCLASS a:X\nCLASS a:Y\nCLASS a:Z\n"
      "LABEL a:X \"Thing\"\nLABEL a:Y \"Thing\"\nLABEL a:Z \"Other\"\n"
      "SUBCLASS a:X a:Top\nSUBCLASS a:Y a:Top\nSUBCLASS a:Z a:Top\n");
  EXPECT_EQ(count_redundancy(o), 1u);
}

TEST(GmrViolationsTest, OnlyEnabledRulesWithGlobalRefinement) {
  MergeReport r;
  r.quality.cyc = 2;
  r.quality.c_u = 1;
  RefinementConfig all;
  EXPECT_THAT(gmr_violations(r, all),
              ::testing::ElementsAre(HasSubstr("R16"), HasSubstr("R19")));
  r.acyclicity_conflicts = 1;
  EXPECT_THAT(gmr_violations(r, all), ::testing::ElementsAre(HasSubstr("R16")));
  RefinementConfig no_global;
  no_global.apply_global = false;
  EXPECT_TRUE(gmr_violations(r, no_global).empty());
  RefinementConfig no_r16;
  no_r16.enabled_rules = {Rule::kR15};
  EXPECT_TRUE(gmr_violations(r, no_r16).empty());
}

MergeReport row(std::string dataset, int variant) {
  MergeReport r;
  r.dataset = std::move(dataset);
  r.variant = variant;
  r.ds_pct = 5.0;
  r.counters.wall_time = std::chrono::duration<double, std::milli>(1.5);
  return r;
}

TEST(RenderCsvTest, HeaderOnlyForNoReports) {
  EXPECT_EQ(render_csv({}),
            "dataset,variant,strategy,k,combine,reconst,output,cor,tr,ds_pct,"
            "tr_pct,ov_pct,max_card,class_cov,prop_cov,inst_cov,str,on,c_u,"
            "cyc,r_local,r_global,merges,wall_ms\n");
}

TEST(RenderCsvTest, OneRow) {
  std::vector<MergeReport> reports{row("d", 3)};
  EXPECT_EQ(render_csv(reports),
            render_csv({}) +
                "d,V3,nary,0,0,0,0,0,0,5.00,0.00,0.00,0,1.0000,1.0000,1.0000,"
                "0,0,0,0,0,0,0,1.500\n");
  EXPECT_EQ(csv_fields(reports[0]).size(), csv_columns().size());
}

TEST(RenderCsvTest, SortedByDatasetThenVariantAndErrorsSkipped) {
  std::vector<MergeReport> reports;
  for (int v : {12, 2, 10, 1}) reports.push_back(row("b", v));
  reports.push_back(row("a", 7));
  MergeReport failed = row("a", 1);
  failed.error = "boom";
  reports.push_back(failed);
  std::string csv = render_csv(reports);
  std::vector<std::string> keys;
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    std::string line = csv.substr(pos, end - pos);
    keys.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
    pos = end + 1;
  }
  EXPECT_THAT(keys, ::testing::ElementsAre("a,V7", "b,V1", "b,V2", "b,V10",
                                           "b,V12"));
  EXPECT_THAT(render_text(reports), HasSubstr("error: boom"));
}

TEST(RenderComparisonTest, ListsEveryStrategy) {
  Fixture fx = fig1_fixture();
  auto corr = build_model(fx.ontologies, std::vector<MappingFile>{fx.perfect});
  std::vector<MergeReport> reports;
  for (Strategy s : {Strategy::kNary, Strategy::kBalanced, Strategy::kLadder}) {
    StrategyConfig c;
    c.strategy = s;
    reports.push_back(compute_report(
        "fig1", merge(fx.ontologies, corr, c), fx.ontologies, corr, c));
  }
  std::string text = render_comparison(reports);
  EXPECT_THAT(text, HasSubstr("nary"));
  EXPECT_THAT(text, HasSubstr("balanced"));
  EXPECT_THAT(text, HasSubstr("ladder"));
}

}  // namespace
}  // namespace ontomerge
