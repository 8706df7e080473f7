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

// Phase I: verb classification and derived-stem formation.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geez/features.hpp"
#include "geez/lexicon.hpp"
#include "geez/script.hpp"
#include "geez/stem_pattern.hpp"

namespace geez {

/// Guttural at radical 1 -> guttural_initial; guttural at any other
/// non-final radical -> guttural_medial; a semivowel anywhere ->
/// semivowel_any; velar final radical -> velar_final.
FlagSet classify_verb(const VerbEntry& entry,
                      const script::RadicalClassTable& classes =
                          script::RadicalClassTable::defaults());

/// Person marking resolved for one subject of a non-perfective stem.
struct PersonSlot {
  std::string prefix_id;  // empty: no prefix
  std::string prefix;
  std::string suffix_id;  // empty: no suffix
  std::string suffix;

  friend bool operator==(const PersonSlot&, const PersonSlot&) = default;
};

struct Stem {
  std::string verb;  // citation form
  TamForm tam = TamForm::perfective;
  StemClass stem_class;
  std::string form;
  std::size_t pattern_line = 0;
  /// Indexed by Png. Empty for perfective stems, which take sms suffixes.
  std::array<std::optional<PersonSlot>, 10> person_prefix_slot;

  const std::optional<PersonSlot>& person(Png p) const {
    return person_prefix_slot[static_cast<std::size_t>(p)];
  }
  friend bool operator==(const Stem&, const Stem&) = default;
};

struct StemDiagnostic {
  TamForm tam = TamForm::perfective;
  std::string stem_class;
  std::string message;
};

struct StemSet {
  std::vector<Stem> stems;  // TAM order, then package class order
  std::vector<StemDiagnostic> diagnostics;
};

/// The pattern that applies, or nullptr. Patterns with a verb= condition win,
/// then the one with more conditions, then a class-specific one, then the
/// earliest in the file.
const StemPattern* select_pattern(const VerbEntry& entry, const FlagSet& flags,
                                  TamForm tam, std::string_view stem_class,
                                  const RulePackage& pkg);

/// Returns nullopt for a declared gap; throws MissingPattern when no
/// pattern applies.
std::optional<Stem> generate_stem(const VerbEntry& entry, TamForm tam,
                                  std::string_view stem_class,
                                  const RulePackage& pkg);

/// One stem per (TAM, class) cell; failures become diagnostics.
StemSet generate_stems(const VerbEntry& entry, const RulePackage& pkg);

}  // namespace geez
