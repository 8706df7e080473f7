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

#pragma once

// Verb lexicon and rule packages.
//
// Lexicon: UTF-8 TSV with a header row
//   infinitive <TAB> radicals <TAB> gloss_am <TAB> gloss_en
// where radicals is a comma list of first-order fidels ("ቀ,ተ,ለ"). Rows may
// use '|' instead of TAB.
//
// Rule package: a directory holding package.manifest (key=value lines) and
// the member files it names: alphabet, affixes, classes, person_markers,
// patterns, rules, compat.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geez/features.hpp"
#include "geez/orthography.hpp"
#include "geez/script.hpp"
#include "geez/stem_pattern.hpp"

namespace geez {

struct VerbEntry {
  std::string infinitive;  // citation form as listed
  std::vector<script::Radical> radicals;
  std::string gloss_am;
  std::string gloss_en;
  FlagSet flags;  // computed at load with the default class table

  friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

/// Throws ParseError, DuplicateEntry or EmptyLexicon.
std::vector<VerbEntry> parse_lexicon(std::string_view text,
                                     const std::string& file_name);
std::vector<VerbEntry> load_lexicon(const std::filesystem::path& path);
std::string format_lexicon(std::span<const VerbEntry> entries);

struct Affix {
  std::string id;
  SlotKind slot = SlotKind::sms;
  std::string form;  // empty: zero morph
  FeatureConstraint features;
  std::string source;

  bool zero() const { return form.empty(); }
  friend bool operator==(const Affix&, const Affix&) = default;
};

struct StemClassDef {
  std::string id;
  std::string marker_affix;
  friend bool operator==(const StemClassDef&, const StemClassDef&) = default;
};

/// Non-perfective subject marking: a person prefix and/or suffix per PNG.
struct PersonMarker {
  TamForm tam = TamForm::indicative;
  std::optional<std::string> stem_class;  // nullopt: any class
  Png png = Png::p3ms;
  std::string prefix_id;  // empty: none
  std::string suffix_id;  // empty: none

  friend bool operator==(const PersonMarker&, const PersonMarker&) = default;
};

struct CompatMatrix {
  std::set<std::pair<Png, Png>> excluded_pairs;

  bool excluded(Png subject, Png object) const {
    return excluded_pairs.contains({subject, object});
  }
  friend bool operator==(const CompatMatrix&, const CompatMatrix&) = default;
};

struct RulePackage {
  std::string name;
  std::string version;
  script::RadicalClassTable classes;
  std::vector<Affix> affixes;
  std::vector<StemClassDef> stem_classes;
  std::vector<PersonMarker> person_markers;
  std::vector<StemPattern> patterns;
  std::vector<orthography::OrthoRule> rules;
  CompatMatrix compat;

  const Affix* find_affix(std::string_view id) const;
  /// Affixes of `slot` whose features unify with `c`, ordered by PNG and then
  /// by inventory order.
  std::vector<const Affix*> affixes_for(SlotKind slot,
                                        const FeatureConstraint& c) const;
  std::optional<std::size_t> class_index(std::string_view id) const;
  /// Class-specific rows win over "*" rows.
  const PersonMarker* person_marker(TamForm tam, std::string_view stem_class,
                                    Png png) const;

  friend bool operator==(const RulePackage&, const RulePackage&) = default;
};

inline constexpr std::size_t kStemClassCount = 5;

/// Throws ManifestMissing, ParseError, DuplicateEntry or DanglingReference.
/// Nothing is returned unless every member file loads and cross-checks.
RulePackage load_rule_package(const std::filesystem::path& dir);
/// Writes the package as a manifest plus member files into `dir`.
void write_rule_package(const RulePackage& pkg, const std::filesystem::path& dir);
/// Cross-reference checks shared by the loader; throws DanglingReference.
void validate_rule_package(const RulePackage& pkg);

/// Finds a verb by its citation form.
const VerbEntry* find_verb(std::span<const VerbEntry> entries,
                           std::string_view citation);

}  // namespace geez
