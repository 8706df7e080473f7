// Copyright 2026 The geez-morph Authors.
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

#include "geez/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

#include "geez/errors.hpp"
#include "geez/morph_sequence.hpp"
#include "geez/stemgen.hpp"
#include "geez/utf8.hpp"
#include "text_util.hpp"

namespace geez {
namespace {

namespace fs = std::filesystem;

struct Row {
  std::size_t line;
  std::vector<std::string> cells;
};

std::vector<std::string> split_row(const std::string& text) {
  const char sep = text.find('\t') != std::string::npos ? '\t' : '|';
  return detail::split(text, sep, true);
}

// Data rows of a headed table. The header must name exactly `columns`.
std::vector<Row> read_table(std::string_view text, const std::string& file,
                            const std::vector<std::string>& columns,
                            std::size_t min_cells) {
  const auto lines = detail::data_lines(text);
  std::vector<Row> rows;
  if (lines.empty()) return rows;
  if (split_row(lines[0].text) != columns) {
    throw ParseError(file, lines[0].number,
                     "header must be: " + detail::join(columns, " "));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_row(lines[i].text);
    if (cells.size() < min_cells || cells.size() > columns.size()) {
      throw ParseError(file, lines[i].number,
                       "expected " + std::to_string(columns.size()) +
                           " columns, got " + std::to_string(cells.size()));
    }
    cells.resize(columns.size());
    rows.push_back({lines[i].number, std::move(cells)});
  }
  return rows;
}

std::string read_member(const fs::path& path) {
  try {
    return detail::read_file(path);
  } catch (const std::exception&) {
    throw ParseError(path.string(), 0, "cannot read file");
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::optional<std::vector<TamForm>> parse_tam_list(const std::string& cell) {
  if (cell == "*") return std::nullopt;
  std::vector<TamForm> out;
  for (const std::string& t : detail::split(cell, ',', true)) {
    auto tam = parse_tam(t);
    if (!tam) throw std::invalid_argument("unknown TAM form '" + t + "'");
    out.push_back(*tam);
  }
  return out;
}

std::optional<std::vector<std::string>> parse_class_list(const std::string& cell) {
  if (cell == "*") return std::nullopt;
  auto out = detail::split(cell, ',', true);
  for (const auto& c : out) {
    if (c.empty()) throw std::invalid_argument("empty class name");
  }
  return out;
}

Png require_png(const std::string& cell) {
  auto p = parse_png(cell);
  if (!p) throw std::invalid_argument("unknown PNG '" + cell + "'");
  return *p;
}

script::Radical parse_radical_cell(const std::string& cell) {
  const std::u32string s = utf8::decode(cell);
  if (s.size() != 1) {
    throw std::invalid_argument("radical must be one fidel, got '" + cell + "'");
  }
  const script::Fidel f = script::decompose(s[0]);
  if (f.order.index() != 1) {
    throw std::invalid_argument("radical must be a first-order fidel, got '" + cell + "'");
  }
  return f.radical;
}

template <typename Fn>
auto at_line(const std::string& file, std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const geez::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(file, line, e.what());
  }
}

script::RadicalClassTable parse_alphabet(std::string_view text,
                                         const std::string& file) {
  script::RadicalClassTable table = script::RadicalClassTable::defaults();
  std::set<char32_t> seen;
  for (const Row& row : read_table(text, file, {"class", "radicals"}, 2)) {
    at_line(file, row.line, [&] {
      auto cls = script::parse_radical_class(row.cells[0]);
      if (!cls || *cls == script::RadicalClass::plain) {
        throw std::invalid_argument("unknown radical class '" + row.cells[0] + "'");
      }
      std::vector<script::Radical> members;
      for (const std::string& r : detail::split_ws(row.cells[1])) {
        members.push_back(parse_radical_cell(r));
        if (!seen.insert(members.back().base()).second) {
          throw std::invalid_argument("radical " + r + " listed in two classes");
        }
      }
      table.assign(*cls, members);
    });
  }
  return table;
}

std::vector<Affix> parse_affixes(std::string_view text, const std::string& file) {
  std::vector<Affix> out;
  std::set<std::string> ids;
  for (const Row& row : read_table(
           text, file, {"id", "slot", "form", "png", "tam", "class", "source"}, 6)) {
    at_line(file, row.line, [&] {
      Affix a;
      a.id = row.cells[0];
      if (a.id.empty()) throw std::invalid_argument("empty affix id");
      auto slot = parse_slot(row.cells[1]);
      if (!slot || *slot == SlotKind::stem) {
        throw std::invalid_argument("bad affix slot '" + row.cells[1] + "'");
      }
      a.slot = *slot;
      if (row.cells[2] != kZeroMorph) {
        a.form = row.cells[2];
        if (!script::is_ethiopic_text(a.form)) {
          throw std::invalid_argument("affix form is not Ethiopic text '" +
                                      a.form + "'");
        }
      }
      if (row.cells[3] != "-") a.features.png = require_png(row.cells[3]);
      if ((a.slot == SlotKind::sms || a.slot == SlotKind::oms) && !a.features.png) {
        throw std::invalid_argument("subject/object marker " + a.id +
                                    " needs a PNG value");
      }
      a.features.tams = parse_tam_list(row.cells[4]);
      a.features.classes = parse_class_list(row.cells[5]);
      a.source = row.cells[6];
      if (!ids.insert(a.id).second) throw DuplicateEntry("affix " + a.id);
      out.push_back(std::move(a));
    });
  }
  return out;
}

std::vector<StemClassDef> parse_classes(std::string_view text,
                                        const std::string& file) {
  std::vector<StemClassDef> out;
  std::set<std::string> ids;
  for (const Row& row : read_table(text, file, {"id", "marker_affix"}, 2)) {
    if (row.cells[0].empty()) throw ParseError(file, row.line, "empty class id");
    if (!ids.insert(row.cells[0]).second) {
      throw DuplicateEntry("stem class " + row.cells[0]);
    }
    out.push_back({row.cells[0], row.cells[1]});
  }
  if (out.size() != kStemClassCount) {
    throw ParseError(file, 0,
                     "expected " + std::to_string(kStemClassCount) +
                         " stem classes, got " + std::to_string(out.size()));
  }
  return out;
}

std::vector<PersonMarker> parse_person_markers(std::string_view text,
                                               const std::string& file) {
  std::vector<PersonMarker> out;
  std::set<std::tuple<TamForm, std::string, Png>> keys;
  for (const Row& row : read_table(
           text, file, {"tam", "class", "png", "prefix", "suffix"}, 5)) {
    at_line(file, row.line, [&] {
      const auto tams = parse_tam_list(row.cells[0]);
      if (!tams) throw std::invalid_argument("person markers need explicit TAM forms");
      const auto classes = parse_class_list(row.cells[1]);
      const Png png = require_png(row.cells[2]);
      for (TamForm t : *tams) {
        if (t == TamForm::perfective) {
          throw std::invalid_argument("perfective subjects use sms affixes");
        }
        const std::vector<std::optional<std::string>> cls =
            classes ? std::vector<std::optional<std::string>>(classes->begin(),
                                                              classes->end())
                    : std::vector<std::optional<std::string>>{std::nullopt};
        for (const auto& c : cls) {
          PersonMarker m;
          m.tam = t;
          m.stem_class = c;
          m.png = png;
          m.prefix_id = row.cells[3] == "-" ? "" : row.cells[3];
          m.suffix_id = row.cells[4] == "-" ? "" : row.cells[4];
          if (!keys.emplace(t, c.value_or("*"), png).second) {
            throw DuplicateEntry("person marker " + std::string(to_string(t)) +
                                 "/" + c.value_or("*") + "/" +
                                 std::string(to_string(png)));
          }
          out.push_back(std::move(m));
        }
      }
    });
  }
  return out;
}

CompatMatrix parse_compat(std::string_view text, const std::string& file) {
  CompatMatrix m;
  for (const Row& row : read_table(text, file, {"subject", "object"}, 2)) {
    at_line(file, row.line, [&] {
      m.excluded_pairs.emplace(require_png(row.cells[0]), require_png(row.cells[1]));
    });
  }
  return m;
}

std::string format_list(const std::optional<std::vector<TamForm>>& tams) {
  if (!tams) return "*";
  std::vector<std::string> parts;
  for (TamForm t : *tams) parts.emplace_back(to_string(t));
  return detail::join(parts, ",");
}

std::string format_list(const std::optional<std::vector<std::string>>& cls) {
  return cls ? detail::join(*cls, ",") : std::string("*");
}

const Affix& require_affix(const RulePackage& pkg, const std::string& id,
                           SlotKind slot, const std::string& where) {
  const Affix* a = pkg.find_affix(id);
  if (a == nullptr || a->slot != slot) throw DanglingReference(id, where);
  return *a;
}

void require_class(const RulePackage& pkg, const std::string& id,
                   const std::string& where) {
  if (!pkg.class_index(id)) throw DanglingReference(id, where);
}

}  // namespace

std::vector<VerbEntry> parse_lexicon(std::string_view text,
                                     const std::string& file_name) {
  std::vector<VerbEntry> out;
  std::set<std::string> seen;
  for (const Row& row : read_table(
           text, file_name, {"infinitive", "radicals", "gloss_am", "gloss_en"}, 2)) {
    at_line(file_name, row.line, [&] {
      VerbEntry e;
      e.infinitive = row.cells[0];
      if (e.infinitive.empty() || !script::is_ethiopic_text(e.infinitive)) {
        throw std::invalid_argument("infinitive must be Ethiopic text");
      }
      for (const std::string& r : detail::split(row.cells[1], ',', true)) {
        e.radicals.push_back(parse_radical_cell(r));
      }
      if (e.radicals.size() < 2) {
        throw std::invalid_argument("a root needs at least two radicals");
      }
      e.gloss_am = row.cells[2];
      e.gloss_en = row.cells[3];
      e.flags = classify_verb(e);
      if (!seen.insert(e.infinitive).second) throw DuplicateEntry(e.infinitive);
      out.push_back(std::move(e));
    });
  }
  if (out.empty()) throw EmptyLexicon(file_name);
  return out;
}

std::vector<VerbEntry> load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_member(path), path.string());
}

std::string format_lexicon(std::span<const VerbEntry> entries) {
  std::string out = "infinitive\tradicals\tgloss_am\tgloss_en\n";
  for (const VerbEntry& e : entries) {
    std::vector<std::string> rads;
    for (const auto& r : e.radicals) rads.push_back(r.id());
    out += e.infinitive + "\t" + detail::join(rads, ",") + "\t" + e.gloss_am +
           "\t" + e.gloss_en + "\n";
  }
  return out;
}

const VerbEntry* find_verb(std::span<const VerbEntry> entries,
                           std::string_view citation) {
  for (const VerbEntry& e : entries) {
    if (e.infinitive == citation) return &e;
  }
  return nullptr;
}

const Affix* RulePackage::find_affix(std::string_view id) const {
  for (const Affix& a : affixes) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<const Affix*> RulePackage::affixes_for(
    SlotKind slot, const FeatureConstraint& c) const {
  std::vector<const Affix*> out;
  for (const Affix& a : affixes) {
    if (a.slot == slot && a.features.unifies(c)) out.push_back(&a);
  }
  std::stable_sort(out.begin(), out.end(), [](const Affix* x, const Affix* y) {
    const int px = x->features.png ? static_cast<int>(*x->features.png) : 99;
    const int py = y->features.png ? static_cast<int>(*y->features.png) : 99;
    return px < py;
  });
  return out;
}

std::optional<std::size_t> RulePackage::class_index(std::string_view id) const {
  for (std::size_t i = 0; i < stem_classes.size(); ++i) {
    if (stem_classes[i].id == id) return i;
  }
  return std::nullopt;
}

const PersonMarker* RulePackage::person_marker(TamForm tam,
                                               std::string_view stem_class,
                                               Png png) const {
  const PersonMarker* fallback = nullptr;
  for (const PersonMarker& m : person_markers) {
    if (m.tam != tam || m.png != png) continue;
    if (m.stem_class && *m.stem_class == stem_class) return &m;
    if (!m.stem_class && fallback == nullptr) fallback = &m;
  }
  return fallback;
}

void validate_rule_package(const RulePackage& pkg) {
  for (const Affix& a : pkg.affixes) {
    if (a.features.classes) {
      for (const std::string& c : *a.features.classes) {
        require_class(pkg, c, "affix " + a.id);
      }
    }
  }
  for (const StemClassDef& c : pkg.stem_classes) {
    require_affix(pkg, c.marker_affix, SlotKind::prefix, "stem class " + c.id);
  }
  for (const PersonMarker& m : pkg.person_markers) {
    const std::string where = "person marker " + std::string(to_string(m.tam)) +
                              "/" + std::string(to_string(m.png));
    if (m.stem_class) require_class(pkg, *m.stem_class, where);
    if (!m.prefix_id.empty()) {
      require_affix(pkg, m.prefix_id, SlotKind::prefix_circumfix, where);
    }
    if (!m.suffix_id.empty()) {
      require_affix(pkg, m.suffix_id, SlotKind::suffix_circumfix, where);
    }
  }
  for (const StemPattern& p : pkg.patterns) {
    const std::string where = "stem pattern at line " + std::to_string(p.line);
    for (const std::string& c : p.classes) require_class(pkg, c, where);
    for (const std::string& id : p.affix_refs()) {
      if (pkg.find_affix(id) == nullptr) throw DanglingReference(id, where);
    }
  }
  for (const orthography::OrthoRule& r : pkg.rules) {
    for (const std::string& c : r.unknown_classes()) {
      throw DanglingReference("@" + c, "rule " + r.id);
    }
  }
}

RulePackage load_rule_package(const std::filesystem::path& dir) {
  const fs::path manifest_path = dir / "package.manifest";
  if (!fs::is_regular_file(manifest_path)) throw ManifestMissing(dir.string());

  static const std::vector<std::string> kMembers = {
      "alphabet", "affixes", "classes", "person_markers",
      "patterns", "rules",   "compat"};
  std::map<std::string, std::string> manifest;
  const std::string manifest_file = manifest_path.string();
  for (const detail::Line& line : detail::data_lines(read_member(manifest_path))) {
    const auto eq = line.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError(manifest_file, line.number, "expected key=value");
    }
    const std::string key(detail::trim(std::string_view(line.text).substr(0, eq)));
    const std::string value(detail::trim(std::string_view(line.text).substr(eq + 1)));
    const bool known = key == "name" || key == "version" ||
                       std::find(kMembers.begin(), kMembers.end(), key) != kMembers.end();
    if (!known) throw ParseError(manifest_file, line.number, "unknown key '" + key + "'");
    if (!manifest.emplace(key, value).second) {
      throw ParseError(manifest_file, line.number, "repeated key '" + key + "'");
    }
  }
  for (const std::string& key : kMembers) {
    if (!manifest.contains(key)) {
      throw ParseError(manifest_file, 0, "missing member '" + key + "'");
    }
  }

  auto member = [&](const std::string& key) {
    const fs::path p = dir / manifest.at(key);
    return std::make_pair(read_member(p), p.string());
  };

  RulePackage pkg;
  pkg.name = manifest.contains("name") ? manifest.at("name") : dir.filename().string();
  pkg.version = manifest.contains("version") ? manifest.at("version") : "";
  {
    auto [text, file] = member("alphabet");
    pkg.classes = parse_alphabet(text, file);
  }
  {
    auto [text, file] = member("affixes");
    pkg.affixes = parse_affixes(text, file);
  }
  {
    auto [text, file] = member("classes");
    pkg.stem_classes = parse_classes(text, file);
  }
  {
    auto [text, file] = member("person_markers");
    pkg.person_markers = parse_person_markers(text, file);
  }
  {
    auto [text, file] = member("patterns");
    pkg.patterns = parse_stem_patterns(text, file);
  }
  {
    auto [text, file] = member("rules");
    pkg.rules = orthography::parse_rules(text, file);
  }
  {
    auto [text, file] = member("compat");
    pkg.compat = parse_compat(text, file);
  }
  validate_rule_package(pkg);
  return pkg;
}

void write_rule_package(const RulePackage& pkg, const std::filesystem::path& dir) {
  fs::create_directories(dir);
  write_text(dir / "package.manifest",
             "name=" + pkg.name + "\nversion=" + pkg.version +
                 "\nalphabet=alphabet.tsv\naffixes=affixes.tsv\n"
                 "classes=classes.tsv\nperson_markers=person_markers.tsv\n"
                 "patterns=stem_patterns.txt\nrules=ortho_rules.txt\n"
                 "compat=compat.tsv\n");

  std::string alphabet = "class\tradicals\n";
  for (auto c : {script::RadicalClass::guttural, script::RadicalClass::semivowel,
                 script::RadicalClass::velar}) {
    std::vector<std::string> ids;
    for (const auto& r : pkg.classes.members(c)) ids.push_back(r.id());
    alphabet += std::string(script::to_string(c)) + "\t" + detail::join(ids, " ") + "\n";
  }
  write_text(dir / "alphabet.tsv", alphabet);

  std::string affixes = "id\tslot\tform\tpng\ttam\tclass\tsource\n";
  for (const Affix& a : pkg.affixes) {
    affixes += a.id + "\t" + std::string(to_string(a.slot)) + "\t" +
               (a.zero() ? std::string(kZeroMorph) : a.form) + "\t" +
               (a.features.png ? std::string(to_string(*a.features.png)) : "-") +
               "\t" + format_list(a.features.tams) + "\t" +
               format_list(a.features.classes) + "\t" + a.source + "\n";
  }
  write_text(dir / "affixes.tsv", affixes);

  std::string classes = "id\tmarker_affix\n";
  for (const StemClassDef& c : pkg.stem_classes) {
    classes += c.id + "\t" + c.marker_affix + "\n";
  }
  write_text(dir / "classes.tsv", classes);

  std::string markers = "tam\tclass\tpng\tprefix\tsuffix\n";
  for (const PersonMarker& m : pkg.person_markers) {
    markers += std::string(to_string(m.tam)) + "\t" + m.stem_class.value_or("*") +
               "\t" + std::string(to_string(m.png)) + "\t" +
               (m.prefix_id.empty() ? "-" : m.prefix_id) + "\t" +
               (m.suffix_id.empty() ? "-" : m.suffix_id) + "\n";
  }
  write_text(dir / "person_markers.tsv", markers);

  std::string patterns;
  for (const StemPattern& p : pkg.patterns) patterns += format_stem_pattern(p) + "\n";
  write_text(dir / "stem_patterns.txt", patterns);

  std::string rules;
  for (const auto& r : pkg.rules) rules += orthography::format_rule(r) + "\n";
  write_text(dir / "ortho_rules.txt", rules);

  std::string compat = "subject\tobject\n";
  for (const auto& [s, o] : pkg.compat.excluded_pairs) {
    compat += std::string(to_string(s)) + "\t" + std::string(to_string(o)) + "\n";
  }
  write_text(dir / "compat.tsv", compat);
}

}  // namespace geez
