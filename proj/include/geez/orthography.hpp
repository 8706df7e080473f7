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

// Two-level boundary rules. A rule rewrites the graphemes on either side of
// a morph boundary; rules are tried at every boundary, left to right, in a
// single pass. The highest-priority matching rule wins.
//
// Rule line syntax (ortho_rules.txt):
//
//   priority | lexical | surface | left_ctx | right_ctx [| id]
//
// lexical   matcher tokens around one boundary token, e.g. "@velar:1 stem+sms ኩ"
// surface   replacement: "$n" copies the n-th matched grapheme, "$n:k" copies
//           it reordered to order k, literal fidels are inserted, "0" is empty
// contexts  matcher tokens or "-"
//
// Matchers: a literal fidel "ለ" (exact), "ለ:6" / "ለ:*" (series at order 6 /
// any order), "@guttural" "@semivowel" "@velar" "@plain" "@any" (optionally
// ":k"), and "[ከኪኩ]" (any listed grapheme). A boundary token is "+",
// optionally qualified by the slot kinds on each side: "stem+sms", "+oms".
// The left kind is the slot of the nearest non-empty morph.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geez/features.hpp"
#include "geez/morph_sequence.hpp"
#include "geez/script.hpp"

namespace geez::orthography {

struct Matcher {
  enum class Kind { grapheme, series, klass, set };

  Kind kind = Kind::grapheme;
  char32_t grapheme = 0;   // exact grapheme, or series base for Kind::series
  std::string class_name;  // Kind::klass: radical class name or "any"
  std::u32string set;      // Kind::set
  int order = 0;           // 0: any order

  bool matches(char32_t ch, const script::RadicalClassTable& classes) const;
  std::string to_string() const;

  friend bool operator==(const Matcher&, const Matcher&) = default;
};

struct BoundarySpec {
  std::optional<SlotKind> left;
  std::optional<SlotKind> right;

  bool admits(std::optional<SlotKind> l, SlotKind r) const;
  std::string to_string() const;

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

struct OutputToken {
  enum class Kind { copy, reorder, literal };

  Kind kind = Kind::literal;
  int ref = 0;  // 1-based index into the matched graphemes
  int order = 0;
  char32_t literal = 0;

  friend bool operator==(const OutputToken&, const OutputToken&) = default;
};

struct OrthoRule {
  std::string id;
  int priority = 0;
  std::vector<Matcher> left;
  BoundarySpec boundary;
  std::vector<Matcher> right;
  std::vector<OutputToken> surface;
  std::vector<Matcher> left_ctx;
  std::vector<Matcher> right_ctx;

  /// Class names that are neither a radical class nor "any".
  std::vector<std::string> unknown_classes() const;

  friend bool operator==(const OrthoRule&, const OrthoRule&) = default;
};

/// Parses one rule line. Throws std::invalid_argument with a reason.
OrthoRule parse_rule(std::string_view line, std::string default_id);
/// Parses a rules file; '#' starts a comment line. Throws ParseError.
std::vector<OrthoRule> parse_rules(std::string_view text,
                                   const std::string& file_name);
std::string format_rule(const OrthoRule& rule);

struct AppliedRule {
  std::string rule_id;
  std::size_t boundary = 0;  // 1-based: boundary i precedes segment i
  std::size_t position = 0;  // grapheme offset in the output at application
  std::string consumed_left;
  std::string consumed_right;
  std::string replacement;

  friend bool operator==(const AppliedRule&, const AppliedRule&) = default;
};

struct RuleTrace {
  std::vector<AppliedRule> applied;
  std::string input;  // lexical string, e.g. "ቀተለ+ኩ"
  std::string output;

  friend bool operator==(const RuleTrace&, const RuleTrace&) = default;
};

struct Realization {
  std::string surface;
  RuleTrace trace;
};

/// Maps a lexical morph sequence to its surface form. Throws
/// ConflictingRules when two rules of the same top priority match.
Realization realize(const MorphSequence& seq, std::span<const OrthoRule> rules,
                    const script::RadicalClassTable& classes =
                        script::RadicalClassTable::defaults());

/// Re-applies the recorded rewrites to `trace.input` without consulting any
/// rule. Throws std::runtime_error if a recorded rewrite does not fit.
std::string replay(const RuleTrace& trace);

struct RuleDiagnostic {
  enum class Kind { conflict, unreachable, unknown_class, duplicate_priority };
  enum class Severity { error, warning };

  Kind kind;
  Severity severity;
  std::vector<std::string> rule_ids;
  std::string message;
};

std::string_view to_string(RuleDiagnostic::Kind k);

/// Static checks over a rule set: equal-priority overlaps, rules shadowed on
/// every probe input, and references to unknown classes.
std::vector<RuleDiagnostic> check_package_rules(
    std::span<const OrthoRule> rules,
    const script::RadicalClassTable& classes =
        script::RadicalClassTable::defaults());

}  // namespace geez::orthography
