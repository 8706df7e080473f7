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

// Morphological feature space shared by every module: TAM forms, the ten
// person-number-gender values, morph slots and feature constraints.

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace geez {

enum class TamForm {
  perfective,
  indicative,
  subjunctive,
  jussive,
  gerundive,
  infinitive,
};

inline constexpr std::array<TamForm, 6> kAllTamForms = {
    TamForm::perfective, TamForm::indicative, TamForm::subjunctive,
    TamForm::jussive,    TamForm::gerundive,  TamForm::infinitive};

/// Person-number-gender, declared in canonical paradigm order.
enum class Png { p3ms, p3fs, p3mp, p3fp, p2ms, p2fs, p2mp, p2fp, p1cs, p1cp };

inline constexpr std::array<Png, 10> kAllPngs = {
    Png::p3ms, Png::p3fs, Png::p3mp, Png::p3fp, Png::p2ms,
    Png::p2fs, Png::p2mp, Png::p2fp, Png::p1cs, Png::p1cp};

/// Morpheme slots, declared in template order.
enum class SlotKind {
  prefix,
  prefix_circumfix,
  stem,
  suffix_circumfix,
  sms,
  oms,
};

inline constexpr std::array<SlotKind, 6> kAllSlotKinds = {
    SlotKind::prefix,           SlotKind::prefix_circumfix, SlotKind::stem,
    SlotKind::suffix_circumfix, SlotKind::sms,              SlotKind::oms};

/// Irregularity triggers. A verb with no flags is regular.
enum class RegularityFlag {
  guttural_initial,
  guttural_medial,
  semivowel_any,
  velar_final,
};

inline constexpr std::array<RegularityFlag, 4> kAllRegularityFlags = {
    RegularityFlag::guttural_initial, RegularityFlag::guttural_medial,
    RegularityFlag::semivowel_any, RegularityFlag::velar_final};

using FlagSet = std::set<RegularityFlag>;

std::string_view to_string(TamForm t);
std::string_view to_string(Png p);
std::string_view to_string(SlotKind s);
std::string_view to_string(RegularityFlag f);
/// Comma-separated flag names in canonical order; empty for regular verbs.
std::string to_string(const FlagSet& flags);
std::optional<TamForm> parse_tam(std::string_view s);
std::optional<RegularityFlag> parse_flag(std::string_view s);
std::optional<Png> parse_png(std::string_view s);
std::optional<SlotKind> parse_slot(std::string_view s);

int person_of(Png p);
/// Independent pronoun used as the row label of paradigm tables.
std::string_view pronoun_of(Png p);

/// Package-defined stem class identifier (e.g. "basic", "causative").
struct StemClass {
  std::string id;
  friend auto operator<=>(const StemClass&, const StemClass&) = default;
};

/// Which feature values an affix marks. An empty optional means
/// "unconstrained" along that dimension.
struct FeatureConstraint {
  std::optional<std::vector<TamForm>> tams;
  std::optional<std::vector<std::string>> classes;
  std::optional<Png> png;

  bool admits_tam(TamForm t) const;
  bool admits_class(std::string_view c) const;
  /// True when every dimension constrained by both sides has a common value.
  bool unifies(const FeatureConstraint& other) const;

  friend bool operator==(const FeatureConstraint&,
                         const FeatureConstraint&) = default;
};

/// The coordinate of one surface form.
struct FeatureBundle {
  TamForm tam = TamForm::perfective;
  StemClass stem_class;
  Png subject = Png::p3ms;
  std::optional<Png> object;

  friend bool operator==(const FeatureBundle&, const FeatureBundle&) = default;
};

std::string to_string(const FeatureBundle& b);

}  // namespace geez
