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

// Phase I -> II -> III pipeline: stems, affix signatures, orthography.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geez/features.hpp"
#include "geez/lexicon.hpp"
#include "geez/morph_sequence.hpp"
#include "geez/orthography.hpp"

namespace geez {

struct SurfaceForm {
  FeatureBundle features;
  std::string text;
  orthography::RuleTrace trace;
  MorphSequence segmentation;

  friend bool operator==(const SurfaceForm&, const SurfaceForm&) = default;
};

struct Diagnostic {
  std::string kind;  // "missing_pattern", "conflicting_rules", ...
  std::string cell;  // e.g. "jussive/causative" or a full feature key
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct Paradigm {
  VerbEntry verb;
  std::vector<SurfaceForm> forms;  // canonical order
  std::vector<Diagnostic> diagnostics;

  const SurfaceForm* find(const FeatureBundle& b) const;
  friend bool operator==(const Paradigm&, const Paradigm&) = default;
};

/// Restricts a paradigm. Unset fields do not constrain.
struct ParadigmFilter {
  std::optional<std::vector<TamForm>> tams;
  std::optional<std::vector<std::string>> classes;
  std::optional<Png> subject;
  std::optional<Png> object;
  bool no_object = false;  // only rule-1 forms
};

/// Throws MissingPattern, NoMatchingAffix, ExcludedCombination,
/// ConflictingRules, or DanglingReference for an unknown stem class.
SurfaceForm synthesize(const VerbEntry& entry, const FeatureBundle& features,
                       const RulePackage& pkg);

Paradigm generate_paradigm(const VerbEntry& entry, const RulePackage& pkg,
                           const ParadigmFilter& filter = {});

struct BatchResult {
  std::vector<Paradigm> paradigms;  // input order
  std::size_t total_forms = 0;
  std::size_t total_diagnostics = 0;
};

/// Paradigms computed on up to `threads` workers; output is independent of
/// the thread count.
BatchResult batch_generate(std::span<const VerbEntry> entries,
                           const RulePackage& pkg, unsigned threads = 1);

/// The infinitive (basic class) surface form of a verb, or nullopt.
std::optional<std::string> infinitive_form(const VerbEntry& entry,
                                           const RulePackage& pkg);

/// Looks a verb up by citation form, falling back to its generated
/// infinitive (so both ቀተለ and ቀቲል find the same entry).
const VerbEntry* lookup_verb(std::span<const VerbEntry> entries,
                             std::string_view form, const RulePackage& pkg);

}  // namespace geez
