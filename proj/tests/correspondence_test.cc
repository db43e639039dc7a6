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
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ontomerge/error.h"
#include "oracles.h"
#include "test_util.h"

namespace ontomerge {
namespace {

using ::ontomerge::testing::fixture_path;
using ::ontomerge::testing::id;
using ::ontomerge::testing::mapping;
using ::ontomerge::testing::onto;

std::vector<std::vector<std::string>> as_iris(const CorrespondenceModel& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cs : m.sets()) {
    std::vector<std::string> s;
    for (const auto& member : cs.members) s.push_back(member.iri);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Ontology> three_x() {
  return {onto("ONTOLOGY a\nCLASS a:X\n"), onto("ONTOLOGY b\nCLASS b:X\n"),
          onto("ONTOLOGY c\nCLASS c:X\nOBJPROP c:p\n")};
}

TEST(BuildModelTest, TransitiveChainFormsOneSet) {
  auto sources = three_x();
  CorrespondenceModel m = build_model(
      sources, std::vector<MappingFile>{mapping("a:X\tb:X\nb:X\tc:X\n")});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_THAT(m.sets()[0].members,
              ::testing::ElementsAre(id("a:X"), id("b:X"), id("c:X")));
  EXPECT_EQ(card(m.sets()[0]), 3u);
  EXPECT_EQ(total_correspondences(m), 3u);
  EXPECT_EQ(m.set_of(id("b:X")), 0u);
  EXPECT_FALSE(m.set_of(id("c:p")).has_value());
}

TEST(BuildModelTest, NoMappingsGivesEmptyModel) {
  auto sources = three_x();
  CorrespondenceModel m = build_model(sources, {});
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(total_correspondences(m), 0u);
}

TEST(BuildModelTest, KindMismatchAndUnknownEntity) {
  auto sources = three_x();
  try {
    build_model(sources, std::vector<MappingFile>{mapping("a:X\tc:p\n")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKindMismatch);
  }
  try {
    build_model(sources, std::vector<MappingFile>{mapping("a:X\tz:Q\n")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEntity);
  }
}

TEST(BuildModelTest, ThresholdAndSelfMappings) {
  std::vector<Ontology> sources{
      onto("ONTOLOGY a\nCLASS a:X\nCLASS a:Y\n"),
      onto("ONTOLOGY b\nCLASS b:X\n")};
  std::vector<MappingFile> maps{mapping("a:X\tb:X\t0.4\na:X\ta:Y\t0.9\n")};
  EXPECT_EQ(build_model(sources, maps).size(), 1u);
  EXPECT_EQ(card(build_model(sources, maps).sets()[0]), 3u);

  CorrespondenceOptions strict;
  strict.min_confidence = 0.5;
  EXPECT_THAT(as_iris(build_model(sources, maps, strict)),
              ::testing::ElementsAre(::testing::ElementsAre("a:X", "a:Y")));

  CorrespondenceOptions no_self;
  no_self.drop_self_mappings = true;
  EXPECT_THAT(as_iris(build_model(sources, maps, no_self)),
              ::testing::ElementsAre(::testing::ElementsAre("a:X", "b:X")));
}

TEST(FromSetsTest, Invariants) {
  EXPECT_THROW(CorrespondenceModel::from_sets({{{id("a:X")}, EntityKind::kClass}}),
               Error);
  EXPECT_THROW(CorrespondenceModel::from_sets(
                   {{{id("a:X"), id("b:X")}, EntityKind::kClass},
                    {{id("b:X"), id("c:X")}, EntityKind::kClass}}),
               Error);
  auto m = CorrespondenceModel::from_sets(
      {{{id("a:X"), id("b:X")}, EntityKind::kClass}});
  EXPECT_EQ(card(m.sets()[0]), 2u);
}

TEST(ToMappingTest, RebuildsTheSameModel) {
  auto sources = three_x();
  CorrespondenceModel m = build_model(
      sources, std::vector<MappingFile>{mapping("c:X\tb:X\nb:X\ta:X\n")});
  CorrespondenceModel again =
      build_model(sources, std::vector<MappingFile>{to_mapping(m)});
  EXPECT_EQ(as_iris(again), as_iris(m));
}

// Random pair lists over four ontologies against the BFS component oracle.
TEST(BuildModelTest, MatchesComponentOracleOnRandomChains) {
  std::vector<Ontology> sources;
  std::vector<std::string> iris;
  for (int o = 0; o < 4; ++o) {
    std::string text = "ONTOLOGY o" + std::to_string(o) + "\n";
    for (int c = 0; c < 12; ++c) {
      std::string iri = "o" + std::to_string(o) + ":C" + std::to_string(c);
      text += "CLASS " + iri + "\n";
      iris.push_back(iri);
    }
    sources.push_back(onto(text));
  }
  std::mt19937_64 rng(7);
  for (int round = 0; round < 10; ++round) {
    oracle::Pairs pairs;
    MappingFile m;
    std::size_t count = 1 + rng() % 30;
    for (std::size_t i = 0; i < count; ++i) {
      const std::string& a = iris[rng() % iris.size()];
      const std::string& b = iris[rng() % iris.size()];
      pairs.emplace_back(a, b);
      m.pairs.push_back({id(a), id(b), 1.0});
    }
    CorrespondenceModel model = build_model(sources, std::vector<MappingFile>{m});
    auto expected = oracle::components(pairs);
    EXPECT_EQ(as_iris(model), expected) << "round " << round;
    std::size_t total = 0;
    for (const auto& c : expected) total += c.size();
    EXPECT_EQ(total_correspondences(model), total);
  }
}

TEST(BuildModelTest, BioLargestSetMatchesOracle) {
  std::vector<Ontology> sources;
  for (const char* f : {"bio/anat.onto", "bio/clin.onto", "bio/path.onto",
                        "bio/phys.onto"}) {
    sources.push_back(read_ontology_file(fixture_path(f)));
  }
  MappingFile map = read_mapping_file(fixture_path("bio/bio.map"));
  CorrespondenceModel model =
      build_model(sources, std::vector<MappingFile>{map});
  oracle::Pairs pairs;
  for (const auto& p : map.pairs) pairs.emplace_back(p.left.iri, p.right.iri);
  auto expected = oracle::components(pairs);
  std::size_t max_card = 0;
  for (const auto& cs : model.sets()) max_card = std::max(max_card, card(cs));
  std::size_t oracle_max = 0;
  std::size_t oracle_total = 0;
  for (const auto& c : expected) {
    oracle_max = std::max(oracle_max, c.size());
    oracle_total += c.size();
  }
  EXPECT_EQ(max_card, oracle_max);
  EXPECT_EQ(max_card, 4u);
  EXPECT_EQ(total_correspondences(model), oracle_total);
}

}  // namespace
}  // namespace ontomerge
