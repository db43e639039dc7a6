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

#include "ontomerge/cli.h"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontomerge/error.h"
#include "ontomerge/fixture.h"
#include "ontomerge/io.h"
#include "ontomerge/matrix.h"
#include "ontomerge/metrics.h"
#include "ontomerge/strategies.h"

namespace ontomerge {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Everything needed to reproduce a merge run.
struct RunSpec {
  std::string dataset = "dataset";
  std::vector<std::string> ontology_paths;
  std::vector<std::string> mapping_paths;
  std::vector<std::string> imperfect_paths;
  std::string strategy = "nary";
  std::string variant;  // empty: none
  double wt = 0.75;
  double wnt = 0.5;
  std::string gmr;  // comma-separated rule list; empty: all rules
  bool no_local = false;
  bool no_global = false;
  int jobs = 1;
  double threshold = 0.0;
  bool drop_self_mappings = false;
  std::optional<std::uint64_t> shuffle_seed;
};

void add_input_options(CLI::App* cmd, RunSpec& spec) {
  cmd->add_option("ontologies", spec.ontology_paths, "Source ontology files")
      ->required();
  cmd->add_option("--map", spec.mapping_paths, "Mapping file (repeatable)");
  cmd->add_option("--map-imperfect", spec.imperfect_paths,
                  "Imperfect mapping file used by variants V4-V12");
  cmd->add_option("--name", spec.dataset, "Dataset name used in reports");
  cmd->add_option("--wt", spec.wt, "Weight of taxonomic relations")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--wnt", spec.wnt, "Weight of non-taxonomic relations")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--gmr", spec.gmr,
                  "Comma-separated refinement rules (default: all)");
  cmd->add_flag("--no-local", spec.no_local, "Disable local refinement");
  cmd->add_flag("--no-global", spec.no_global, "Disable global refinement");
  cmd->add_option("--jobs", spec.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threshold", spec.threshold,
                  "Ignore mapping pairs below this confidence")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--drop-self-mappings", spec.drop_self_mappings,
                "Ignore pairs inside one ontology");
  cmd->add_option("--shuffle-seed", spec.shuffle_seed,
                  "Shuffle the ontology order before merging");
}

std::set<Rule> parse_rules(const std::string& text) {
  if (text.empty()) return all_rules();
  std::set<Rule> rules;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto rule = parse_rule(item);
    if (!rule) {
      throw Error(ErrorCode::kInvalidArgument, "unknown rule '" + item + "'");
    }
    rules.insert(*rule);
  }
  return rules;
}

StrategyConfig make_config(const RunSpec& spec) {
  StrategyConfig config;
  auto strategy = parse_strategy(spec.strategy);
  if (!strategy) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown strategy '" + spec.strategy +
                    "' (expected nary, ladder or balanced)");
  }
  config.strategy = *strategy;
  config.weights = Weights{spec.wt, spec.wnt};
  config.refinement.enabled_rules = parse_rules(spec.gmr);
  config.refinement.apply_local = !spec.no_local;
  config.refinement.apply_global = !spec.no_global;
  config.jobs = spec.jobs;
  if (!spec.variant.empty()) {
    auto id = parse_variant(spec.variant);
    if (!id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown variant '" + spec.variant + "' (expected V1..V12)");
    }
    config = apply_variant(std::move(config), *id);
  }
  return config;
}

Dataset load_dataset(const RunSpec& spec) {
  Dataset d;
  d.name = spec.dataset;
  for (const auto& p : spec.ontology_paths) {
    d.ontologies.push_back(read_ontology_file(p));
  }
  for (const auto& p : spec.mapping_paths) {
    d.mappings.push_back(read_mapping_file(p));
  }
  for (const auto& p : spec.imperfect_paths) {
    d.imperfect_mappings.push_back(read_mapping_file(p));
  }
  d.options.min_confidence = spec.threshold;
  d.options.drop_self_mappings = spec.drop_self_mappings;
  if (spec.shuffle_seed) {
    d.ontologies = shuffled(d.ontologies, *spec.shuffle_seed);
  }
  return d;
}

std::vector<std::string> absolute_paths(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& p : in) out.push_back(fs::absolute(p).lexically_normal().string());
  return out;
}

json spec_to_json(const RunSpec& spec) {
  json j;
  j["dataset"] = spec.dataset;
  j["ontologies"] = absolute_paths(spec.ontology_paths);
  j["mappings"] = absolute_paths(spec.mapping_paths);
  j["imperfect_mappings"] = absolute_paths(spec.imperfect_paths);
  j["strategy"] = spec.strategy;
  j["variant"] = spec.variant;
  j["wt"] = spec.wt;
  j["wnt"] = spec.wnt;
  j["gmr"] = spec.gmr;
  j["no_local"] = spec.no_local;
  j["no_global"] = spec.no_global;
  j["jobs"] = spec.jobs;
  j["threshold"] = spec.threshold;
  j["drop_self_mappings"] = spec.drop_self_mappings;
  j["shuffle_seed"] =
      spec.shuffle_seed ? json(*spec.shuffle_seed) : json(nullptr);
  return j;
}

RunSpec spec_from_json(const json& j) {
  RunSpec spec;
  spec.dataset = j.at("dataset").get<std::string>();
  spec.ontology_paths = j.at("ontologies").get<std::vector<std::string>>();
  spec.mapping_paths = j.at("mappings").get<std::vector<std::string>>();
  spec.imperfect_paths =
      j.at("imperfect_mappings").get<std::vector<std::string>>();
  spec.strategy = j.at("strategy").get<std::string>();
  spec.variant = j.at("variant").get<std::string>();
  spec.wt = j.at("wt").get<double>();
  spec.wnt = j.at("wnt").get<double>();
  spec.gmr = j.at("gmr").get<std::string>();
  spec.no_local = j.at("no_local").get<bool>();
  spec.no_global = j.at("no_global").get<bool>();
  spec.jobs = j.at("jobs").get<int>();
  spec.threshold = j.at("threshold").get<double>();
  spec.drop_self_mappings = j.at("drop_self_mappings").get<bool>();
  if (!j.at("shuffle_seed").is_null()) {
    spec.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
  }
  return spec;
}

struct Outcome {
  RunResult run;
  MergeReport report;
};

Outcome execute(const Dataset& d, const StrategyConfig& config) {
  CorrespondenceModel corr = dataset_model(d, config);
  Outcome o;
  o.run = merge(d.ontologies, corr, config);
  o.report = compute_report(d.name, o.run, d.ontologies, corr, config);
  return o;
}

MappingFile integrated_mapping(const MergeModel& model) {
  MappingFile m;
  for (const auto& [source, image] : model.integrated_of) {
    m.pairs.push_back({source, image, 1.0});
  }
  return m;
}

// Maps a failure inside a merge run to an exit status.
int merge_failure(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return e.code() == ErrorCode::kNonConvergence ? kExitNonConvergence
                                                : kExitInvariant;
}

int input_failure(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return kExitInputError;
}

int cmd_merge(const RunSpec& spec, const std::string& out_dir,
              bool dump_blocks, std::ostream& out, std::ostream& err) {
  Dataset d;
  StrategyConfig config;
  try {
    config = make_config(spec);
    d = load_dataset(spec);
  } catch (const Error& e) {
    return input_failure(e, err);
  }
  Outcome o;
  try {
    o = execute(d, config);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUnknownEntity ||
        e.code() == ErrorCode::kKindMismatch) {
      return input_failure(e, err);
    }
    return merge_failure(e, err);
  }

  try {
    fs::path dir(out_dir);
    fs::create_directories(dir);
    write_text_file(dir / "merged.onto", serialize_ontology(o.run.model.ontology));
    write_text_file(dir / "integrated.map",
                    serialize_mapping(integrated_mapping(o.run.model)));
    std::vector<MergeReport> reports{o.report};
    write_text_file(dir / "report.txt", render_text(reports));
    write_text_file(dir / "report.csv", render_csv(reports));
    write_text_file(dir / "run.json", spec_to_json(spec).dump(2) + "\n");
    if (dump_blocks) {
      for (const SubOntology& s : o.run.blocks) {
        write_text_file(dir / ("block_" + std::to_string(s.block_id) + ".onto"),
                        serialize_ontology(s.ontology));
      }
    }
    std::vector<MergeReport> shown{o.report};
    out << render_text(shown);
  } catch (const Error& e) {
    return input_failure(e, err);
  }

  std::vector<std::string> violations =
      gmr_violations(o.report, config.refinement);
  for (const auto& v : violations) err << "violation: " << v << "\n";
  return violations.empty() ? kExitOk : kExitInvariant;
}

int cmd_compare(const RunSpec& spec, const std::string& out_dir,
                std::ostream& out, std::ostream& err) {
  if (spec.ontology_paths.size() < 3) {
    err << "error: compare needs at least three ontologies (got "
        << spec.ontology_paths.size()
        << "); use 'merge --strategy ...' for two inputs\n";
    return kExitInputError;
  }
  Dataset d;
  StrategyConfig base;
  try {
    base = make_config(spec);
    d = load_dataset(spec);
  } catch (const Error& e) {
    return input_failure(e, err);
  }
  std::vector<MergeReport> reports;
  for (Strategy s : {Strategy::kNary, Strategy::kBalanced, Strategy::kLadder}) {
    StrategyConfig config = base;
    config.strategy = s;
    try {
      reports.push_back(execute(d, config).report);
    } catch (const Error& e) {
      return merge_failure(e, err);
    }
  }
  out << render_comparison(reports);
  if (!out_dir.empty()) {
    try {
      fs::create_directories(out_dir);
      write_text_file(fs::path(out_dir) / "compare.txt",
                      render_comparison(reports));
      write_text_file(fs::path(out_dir) / "report.txt", render_text(reports));
    } catch (const Error& e) {
      return input_failure(e, err);
    }
  }
  return kExitOk;
}

std::string variant_grid(std::span<const StrategyConfig> configs) {
  std::ostringstream os;
  os << "variant  strategy  mapping  global  local\n";
  for (const StrategyConfig& c : configs) {
    const Variant& v = variant(*c.variant_id);
    os << "V" << v.id << "  " << strategy_name(c.strategy) << "  "
       << (v.imperfect_mapping ? "imperfect" : "perfect") << "  "
       << (c.refinement.apply_global ? "yes" : "no") << "  "
       << (c.refinement.apply_local ? "yes" : "no") << "\n";
  }
  return os.str();
}

int cmd_matrix(const RunSpec& spec, const std::string& variants,
               const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
  std::vector<Dataset> datasets(1);
  std::vector<StrategyConfig> configs;
  try {
    StrategyConfig base = make_config(spec);
    datasets[0] = load_dataset(spec);
    std::vector<int> ids;
    if (variants.empty()) {
      for (int i = 1; i <= kVariantCount; ++i) ids.push_back(i);
    } else {
      std::stringstream ss(variants);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto id = parse_variant(item);
        if (!id) {
          throw Error(ErrorCode::kInvalidArgument,
                      "unknown variant '" + item + "'");
        }
        ids.push_back(*id);
      }
    }
    for (int id : ids) configs.push_back(apply_variant(base, id));
  } catch (const Error& e) {
    return input_failure(e, err);
  }

  std::vector<MergeReport> reports = run_matrix(datasets, configs, spec.jobs);
  int status = kExitOk;
  for (const MergeReport& r : reports) {
    if (!r.error.empty()) {
      err << "error: V" << r.variant.value_or(0) << ": " << r.error << "\n";
      status = kExitInvariant;
    }
  }
  out << variant_grid(configs) << "\n" << render_csv(reports);
  if (!out_dir.empty()) {
    try {
      fs::create_directories(out_dir);
      write_text_file(fs::path(out_dir) / "report.csv", render_csv(reports));
      write_text_file(fs::path(out_dir) / "report.txt",
                      variant_grid(configs) + "\n" + render_text(reports));
    } catch (const Error& e) {
      return input_failure(e, err);
    }
  }
  return status;
}

struct FixtureSpec {
  FixtureParams params;
  std::optional<std::uint64_t> seed;
  std::string preset;
  std::string out_dir;
};

int cmd_gen_fixture(const FixtureSpec& spec, std::ostream& out,
                    std::ostream& err) {
  try {
    Fixture fx;
    if (spec.preset == "fig1") {
      fx = fig1_fixture();
    } else if (!spec.preset.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown preset '" + spec.preset + "'");
    } else {
      FixtureParams params = spec.params;
      if (spec.seed) {
        params.seed = *spec.seed;
      } else if (const char* env = std::getenv("ONTOMERGE_SEED")) {
        try {
          params.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw Error(ErrorCode::kInvalidArgument,
                      std::string("ONTOMERGE_SEED is not a number: ") + env);
        }
      }
      fx = generate_fixture(params);
    }
    for (const auto& p : write_fixture(fx, spec.out_dir)) out << p << "\n";
  } catch (const Error& e) {
    return input_failure(e, err);
  }
  return kExitOk;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  return fields;
}

int cmd_verify_report(const std::string& dir_text, std::ostream& out,
                      std::ostream& err) {
  fs::path dir(dir_text);
  RunSpec spec;
  Dataset d;
  StrategyConfig config;
  Ontology on_disk;
  std::map<EntityId, EntityId> integrated_of;
  std::vector<std::string> stored;
  try {
    json j;
    try {
      j = json::parse(read_text_file(dir / "run.json"));
      spec = spec_from_json(j);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kSyntax,
                  (dir / "run.json").string() + ": " + e.what());
    }
    config = make_config(spec);
    d = load_dataset(spec);
    on_disk = read_ontology_file(dir / "merged.onto");
    for (const MappingPair& p :
         read_mapping_file(dir / "integrated.map").pairs) {
      integrated_of.emplace(p.left, p.right);
    }
    std::stringstream csv(read_text_file(dir / "report.csv"));
    std::string line;
    std::getline(csv, line);  // header
    if (!std::getline(csv, line)) {
      throw Error(ErrorCode::kSyntax, "report.csv has no data row");
    }
    stored = split_csv(line);
  } catch (const Error& e) {
    return input_failure(e, err);
  }

  Outcome o;
  try {
    o = execute(d, config);
  } catch (const Error& e) {
    return merge_failure(e, err);
  }
  o.report.quality = measure_quality(on_disk, d.ontologies, integrated_of);

  int mismatches = 0;
  if (serialize_ontology(o.run.model.ontology) !=
      serialize_ontology(on_disk)) {
    err << "mismatch: merged.onto differs from a fresh run\n";
    ++mismatches;
  }
  std::vector<std::string> columns = csv_columns();
  std::vector<std::string> fresh = csv_fields(o.report);
  if (stored.size() != columns.size()) {
    err << "mismatch: report.csv row has " << stored.size()
        << " fields, expected " << columns.size() << "\n";
    return kExitInvariant;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == "wall_ms") continue;
    if (stored[i] != fresh[i]) {
      err << "mismatch: " << columns[i] << " stored=" << stored[i]
          << " recomputed=" << fresh[i] << "\n";
      ++mismatches;
    }
  }
  if (mismatches > 0) return kExitInvariant;
  out << "verified " << (columns.size() - 1) << " fields\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Partition-based n-ary ontology merging"};
  app.require_subcommand(1);

  RunSpec merge_spec;
  std::string merge_out = ".";
  bool dump_blocks = false;
  CLI::App* merge_cmd = app.add_subcommand("merge", "Merge ontologies");
  add_input_options(merge_cmd, merge_spec);
  merge_cmd->add_option("--strategy", merge_spec.strategy,
                        "nary, ladder or balanced");
  merge_cmd->add_option("--variant", merge_spec.variant,
                        "V1..V12; overrides strategy and refinement levels");
  merge_cmd->add_option("--out", merge_out, "Output directory");
  merge_cmd->add_flag("--dump-blocks", dump_blocks,
                      "Write every sub-ontology as block_<id>.onto");

  RunSpec compare_spec;
  std::string compare_out;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare n-ary, balanced and ladder");
  add_input_options(compare_cmd, compare_spec);
  compare_cmd->add_option("--out", compare_out, "Output directory");

  RunSpec matrix_spec;
  std::string matrix_out;
  std::string matrix_variants;
  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "Run the variant matrix V1-V12");
  add_input_options(matrix_cmd, matrix_spec);
  matrix_cmd->add_option("--variants", matrix_variants,
                         "Comma-separated subset, e.g. V1,V3");
  matrix_cmd->add_option("--out", matrix_out, "Output directory");

  FixtureSpec fixture;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-fixture", "Generate a synthetic dataset");
  gen_cmd->add_option("--n", fixture.params.n, "Number of ontologies");
  gen_cmd->add_option("--size", fixture.params.size,
                      "Classes per ontology");
  gen_cmd->add_option("--overlap", fixture.params.overlap,
                      "Fraction of shared classes");
  gen_cmd->add_option("--seed", fixture.seed,
                      "Random seed (default: $ONTOMERGE_SEED or 1)");
  gen_cmd->add_option("--preset", fixture.preset, "Named preset: fig1");
  gen_cmd->add_option("--out", fixture.out_dir, "Output directory")
      ->required();

  std::string verify_dir;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-report", "Recompute a merge report from its artifacts");
  verify_cmd->add_option("dir", verify_dir, "Directory written by merge")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (merge_cmd->parsed()) {
    return cmd_merge(merge_spec, merge_out, dump_blocks, out, err);
  }
  if (compare_cmd->parsed()) return cmd_compare(compare_spec, compare_out, out, err);
  if (matrix_cmd->parsed()) {
    return cmd_matrix(matrix_spec, matrix_variants, matrix_out, out, err);
  }
  if (gen_cmd->parsed()) return cmd_gen_fixture(fixture, out, err);
  return cmd_verify_report(verify_dir, out, err);
}

}  // namespace ontomerge
