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

#include "ontomerge/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <system_error>
#include <utility>

#include "ontomerge/error.h"

namespace ontomerge {
namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ": " + what);
}

// Splits a statement into tokens. A double-quoted token may contain spaces
// and the escapes \" \\ \n. A token starting with '#' ends the statement.
std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\') {
          if (i >= line.size()) syntax_error(lineno, "dangling escape");
          char e = line[i++];
          if (e == 'n') {
            text.push_back('\n');
          } else if (e == '"' || e == '\\') {
            text.push_back(e);
          } else {
            syntax_error(lineno, std::string("unknown escape \\") + e);
          }
        } else {
          text.push_back(d);
        }
      }
      if (!closed) syntax_error(lineno, "unterminated string");
      // Keep the quote marker so LABEL can tell strings from IRIs.
      tokens.push_back("\"" + text);
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    tokens.emplace_back(line.substr(i, end - i));
    i = end;
  }
  return tokens;
}

bool is_quoted(const std::string& token) {
  return !token.empty() && token.front() == '"';
}

struct Statement {
  std::size_t line = 0;
  std::vector<std::string> tokens;
};

const std::map<std::string_view, EntityKind>& declaration_keywords() {
  static const auto* table = new std::map<std::string_view, EntityKind>{
      {"CLASS", EntityKind::kClass},
      {"OBJPROP", EntityKind::kObjectProperty},
      {"DATAPROP", EntityKind::kDataProperty},
      {"INSTANCE", EntityKind::kInstance},
  };
  return *table;
}

std::string_view declaration_keyword(EntityKind kind) {
  switch (kind) {
    case EntityKind::kClass: return "CLASS";
    case EntityKind::kObjectProperty: return "OBJPROP";
    case EntityKind::kDataProperty: return "DATAPROP";
    case EntityKind::kInstance: return "INSTANCE";
  }
  return "CLASS";
}

std::string_view axiom_keyword(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::kSubClassOf: return "SUBCLASS";
    case AxiomKind::kDomain: return "DOMAIN";
    case AxiomKind::kRange: return "RANGE";
    case AxiomKind::kUnionOf: return "UNION";
    case AxiomKind::kInstanceOf: return "TYPE";
    case AxiomKind::kSubPropertyOf: return "SUBPROP";
  }
  return "SUBCLASS";
}

Axiom axiom_from_statement(const Statement& s) {
  const auto& t = s.tokens;
  const std::string& kw = t[0];
  auto expect = [&](std::size_t n) {
    if (t.size() != n) {
      syntax_error(s.line, kw + " expects " + std::to_string(n - 1) +
                               " arguments, got " +
                               std::to_string(t.size() - 1));
    }
  };
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (is_quoted(t[i])) syntax_error(s.line, kw + " takes IRIs, not strings");
  }
  if (kw == "SUBCLASS") {
    expect(3);
    return Axiom::sub_class_of(t[1], t[2]);
  }
  if (kw == "SUBPROP") {
    expect(3);
    return Axiom::sub_property_of(t[1], t[2]);
  }
  if (kw == "DOMAIN") {
    expect(3);
    return Axiom::domain(t[1], t[2]);
  }
  if (kw == "RANGE") {
    expect(3);
    return Axiom::range(t[1], t[2]);
  }
  if (kw == "TYPE") {
    expect(3);
    return Axiom::instance_of(t[1], t[2]);
  }
  if (kw == "UNION") {
    if (t.size() < 4) syntax_error(s.line, "UNION needs at least two members");
    return Axiom::union_of(t[1], {t.begin() + 2, t.end()});
  }
  syntax_error(s.line, "unsupported statement '" + kw + "'");
}

std::string escape_label(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string format_confidence(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  std::vector<Statement> statements;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    auto tokens = tokenize(line, lineno);
    if (!tokens.empty()) statements.push_back({lineno, std::move(tokens)});
  }
  if (statements.empty() || statements[0].tokens[0] != "ONTOLOGY") {
    syntax_error(statements.empty() ? 1 : statements[0].line,
                 "file must start with 'ONTOLOGY <name>'");
  }
  if (statements[0].tokens.size() != 2 || is_quoted(statements[0].tokens[1])) {
    syntax_error(statements[0].line, "ONTOLOGY expects a single name");
  }
  Ontology ontology(statements[0].tokens[1]);

  // Declarations first so that axioms may reference entities declared later.
  std::map<std::string, std::vector<std::string>> labels;
  std::map<std::string, std::size_t> label_lines;
  std::vector<const Statement*> axioms;
  for (std::size_t i = 1; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    const std::string& kw = s.tokens[0];
    auto decl = declaration_keywords().find(kw);
    if (decl != declaration_keywords().end()) {
      if (s.tokens.size() != 2 || is_quoted(s.tokens[1])) {
        syntax_error(s.line, kw + " expects a single IRI");
      }
      Entity e;
      e.id = EntityId{s.tokens[1]};
      e.kind = decl->second;
      e.origin = ontology.name();
      e.labels.insert(local_name(s.tokens[1]));
      try {
        ontology.add_entity(std::move(e));
      } catch (const Error& err) {
        throw Error(err.code(),
                    "line " + std::to_string(s.line) + ": " + err.what());
      }
    } else if (kw == "LABEL") {
      if (s.tokens.size() != 3 || is_quoted(s.tokens[1]) ||
          !is_quoted(s.tokens[2])) {
        syntax_error(s.line, "LABEL expects <iri> \"<text>\"");
      }
      labels[s.tokens[1]].push_back(s.tokens[2].substr(1));
      label_lines.emplace(s.tokens[1], s.line);
    } else if (kw == "ONTOLOGY") {
      syntax_error(s.line, "second ONTOLOGY header");
    } else {
      axioms.push_back(&s);
    }
  }

  for (auto& [iri, texts] : labels) {
    const Entity* e = ontology.find(EntityId{iri});
    if (e == nullptr) {
      throw Error(ErrorCode::kUnknownEntity,
                  "line " + std::to_string(label_lines[iri]) +
                      ": LABEL for undeclared entity '" + iri + "'");
    }
    Entity replaced = *e;
    replaced.labels.clear();
    replaced.labels.insert(texts.begin(), texts.end());
    ontology.remove_entity(replaced.id);
    ontology.add_entity(std::move(replaced));
  }

  for (const Statement* s : axioms) {
    Axiom axiom = axiom_from_statement(*s);
    axiom.provenance = ontology.name();
    try {
      ontology.add_axiom(std::move(axiom));
    } catch (const Error& err) {
      throw Error(err.code(),
                  "line " + std::to_string(s->line) + ": " + err.what());
    }
  }
  return ontology;
}

Ontology parse_ontology(std::istream& in) { return parse_ontology(slurp(in)); }

MappingFile parse_mapping(std::string_view text) {
  MappingFile mapping;
  std::size_t lineno = 0;
  bool seen_content = false;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    if (!seen_content && line.substr(0, 8) == "MAPPING ") {
      seen_content = true;
      std::istringstream header{std::string(line.substr(8))};
      if (!(header >> mapping.left_name >> mapping.right_name)) {
        syntax_error(lineno, "MAPPING header expects two ontology names");
      }
      std::string extra;
      if (header >> extra) syntax_error(lineno, "trailing text after header");
      continue;
    }
    seen_content = true;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos
                                              ? std::string_view::npos
                                              : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      syntax_error(lineno, "expected left<TAB>right[<TAB>confidence]");
    }
    for (std::size_t i = 0; i < 2; ++i) {
      if (fields[i].empty() ||
          fields[i].find(' ') != std::string_view::npos) {
        syntax_error(lineno, "malformed IRI field");
      }
    }
    MappingPair pair{EntityId{std::string(fields[0])},
                     EntityId{std::string(fields[1])}, 1.0};
    if (fields.size() == 3) {
      std::string_view conf = fields[2];
      auto [ptr, ec] =
          std::from_chars(conf.data(), conf.data() + conf.size(),
                          pair.confidence);
      if (ec != std::errc() || ptr != conf.data() + conf.size()) {
        syntax_error(lineno, "malformed confidence '" + std::string(conf) +
                                 "'");
      }
      if (!(pair.confidence >= 0.0 && pair.confidence <= 1.0)) {
        throw Error(ErrorCode::kConfidenceRange,
                    "line " + std::to_string(lineno) + ": confidence " +
                        std::string(conf) + " outside [0,1]");
      }
    }
    mapping.pairs.push_back(std::move(pair));
  }
  return mapping;
}

MappingFile parse_mapping(std::istream& in) { return parse_mapping(slurp(in)); }

std::string serialize_ontology(const Ontology& ontology) {
  std::string out = "ONTOLOGY " + ontology.name() + "\n";
  for (const auto& [id, entity] : ontology.entities()) {
    out += declaration_keyword(entity.kind);
    out += ' ';
    out += id.iri;
    out += '\n';
  }
  for (const auto& [id, entity] : ontology.entities()) {
    if (entity.labels.size() == 1 &&
        *entity.labels.begin() == local_name(id.iri)) {
      continue;
    }
    for (const std::string& label : entity.labels) {
      out += "LABEL " + id.iri + " " + escape_label(label) + "\n";
    }
  }
  std::vector<std::string> lines;
  lines.reserve(ontology.axioms().size());
  for (const Axiom& a : ontology.axioms()) {
    std::string line(axiom_keyword(a.kind));
    a.for_each_participant([&](const EntityId& id) {
      line += ' ';
      line += id.iri;
    });
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string serialize_mapping(const MappingFile& mapping) {
  std::string out;
  if (!mapping.left_name.empty() || !mapping.right_name.empty()) {
    out += "MAPPING " + mapping.left_name + " " + mapping.right_name + "\n";
  }
  for (const MappingPair& p : mapping.pairs) {
    out += p.left.iri + "\t" + p.right.iri + "\t" +
           format_confidence(p.confidence) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  }
  return slurp(in);
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
  }
}

namespace {

template <typename T, typename Fn>
T parse_file(const std::filesystem::path& path, Fn&& parse) {
  std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const Error& err) {
    throw Error(err.code(), path.string() + ": " + err.what());
  }
}

}  // namespace

Ontology read_ontology_file(const std::filesystem::path& path) {
  return parse_file<Ontology>(
      path, [](std::string_view t) { return parse_ontology(t); });
}

MappingFile read_mapping_file(const std::filesystem::path& path) {
  return parse_file<MappingFile>(
      path, [](std::string_view t) { return parse_mapping(t); });
}

}  // namespace ontomerge
