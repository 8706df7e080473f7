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

// Accuracy against gold paradigms, error categories, and the published
// per-verb evaluation counts with an arithmetic audit.
//
// Gold files: UTF-8 TSV named <verb>.tsv with header
//   tam <TAB> class <TAB> subject <TAB> object <TAB> surface
// where object is "-" for forms without an object marker.

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geez/features.hpp"
#include "geez/lexicon.hpp"
#include "geez/script.hpp"
#include "geez/synthesizer.hpp"

namespace geez::eval {

enum class ErrorCategory {
  exceptional_character,
  exceptional_concatenation,
  structural_divergence,
  missing_rule,
  uncategorized,
};

inline constexpr std::array<ErrorCategory, 5> kAllErrorCategories = {
    ErrorCategory::exceptional_character, ErrorCategory::exceptional_concatenation,
    ErrorCategory::structural_divergence, ErrorCategory::missing_rule,
    ErrorCategory::uncategorized};

std::string_view to_string(ErrorCategory c);

struct GoldEntry {
  FeatureBundle features;
  std::string surface;
};

struct GoldSet {
  std::string verb;
  std::vector<GoldEntry> entries;
  std::string source;
};

/// Throws ParseError or DuplicateEntry.
GoldSet parse_gold(std::string_view text, const std::string& verb,
                   const std::string& source);
GoldSet load_gold(const std::filesystem::path& path);
/// Every *.tsv in `dir`, sorted by file name.
std::vector<GoldSet> load_gold_dir(const std::filesystem::path& dir);

struct Mismatch {
  FeatureBundle features;
  std::string got;
  std::string expected;
  ErrorCategory category = ErrorCategory::uncategorized;
};

struct EvalReport {
  std::string label;
  std::size_t generated = 0;  // compared cells
  std::size_t correct = 0;
  std::size_t wrong = 0;
  std::map<ErrorCategory, std::size_t> per_category;
  std::vector<Mismatch> mismatches;

  /// correct / generated; 0 for an empty report.
  double accuracy() const;
};

/// Exact comparison per gold cell. Ethiopic syllables have no canonical
/// decompositions, so NFC is the identity on validated text and plain byte
/// equality is used. Throws GoldKeyUnmatched for a gold cell the paradigm
/// does not contain.
EvalReport score(const Paradigm& paradigm, const GoldSet& gold,
                 const script::RadicalClassTable& classes =
                     script::RadicalClassTable::defaults());

/// A report carrying only counts.
EvalReport counts_report(std::string label, std::size_t generated,
                         std::size_t correct);

/// Sums counts; mismatches are concatenated in input order. Throws
/// std::invalid_argument for an empty input.
EvalReport aggregate(std::span<const EvalReport> reports);

/// Checks, in order: a flagged radical (initial/medial guttural, final
/// velar) inside the differing span; a morph boundary inside the differing
/// span with the same radical on both sides; output equal to the bare
/// concatenation of morphs; any regularity flag; otherwise uncategorized.
ErrorCategory categorize(const SurfaceForm& got, std::string_view expected,
                         const VerbEntry& entry,
                         const script::RadicalClassTable& classes =
                             script::RadicalClassTable::defaults());

// Published evaluation figures.

struct PublishedRow {
  int index;
  std::string_view verb;
  bool regular;
  std::size_t generated;
  std::size_t correct;
  std::size_t wrong;
  double printed_accuracy;  // percent, as printed
};

std::span<const PublishedRow> published_rows();

/// Aggregates stated in prose alongside the table.
struct PublishedClaims {
  std::size_t table_generated = 26867;
  std::size_t table_correct = 26179;
  std::size_t table_wrong = 688;
  double table_accuracy = 97.4;
  std::size_t regular_generated = 7577;
  std::size_t irregular_generated = 19290;
  std::size_t total_errors = 668;
  std::size_t regular_errors = 8;
  std::size_t irregular_errors = 661;
  double regular_accuracy = 99.6;
  double irregular_accuracy = 96.6;
  double error_rate = 2.6;
};

const PublishedClaims& published_claims();

struct AuditFinding {
  std::string id;
  bool consistent;
  std::string message;
};

/// Recomputes every published aggregate from the per-verb rows.
std::vector<AuditFinding> audit_published();

inline constexpr double kPercentTolerance = 0.1;

}  // namespace geez::eval
