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

// Stem-formation patterns (stem_patterns.txt).
//
//   tam | class | conditions | template
//
// tam and class are comma lists or "*". Conditions are whitespace-separated:
//   *            always
//   regular      the verb has no regularity flags
//   <flag>       the verb carries that flag (guttural_initial, ...)
//   n=K          the root has K radicals
//   Ri=Rj        radicals i and j are identical
//   Rk@class     radical k belongs to a radical class
//   verb=X       per-verb override keyed by citation form
// Template tokens:
//   Rk(oN)       radical k at order N
//   Rk(del)      radical k deleted
//   Rk(X:N)      radical k replaced by series X at order N
//   {affix_id}   the form of an affix from the inventory
//   literal fidels, inserted verbatim
// A template of "-" declares a gap: the cell does not exist for that verb.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "geez/features.hpp"
#include "geez/script.hpp"

namespace geez {

struct PatternCondition {
  enum class Kind { any, regular, flag, radical_count, radicals_equal,
                    radical_class, verb };

  Kind kind = Kind::any;
  RegularityFlag flag = RegularityFlag::guttural_initial;
  int a = 0;  // radical count, or first radical index
  int b = 0;  // second radical index
  script::RadicalClass radical_class = script::RadicalClass::plain;
  std::string verb;

  std::string to_string() const;
  friend bool operator==(const PatternCondition&, const PatternCondition&) = default;
};

struct TemplateToken {
  enum class Kind { radical, affix, literal };
  enum class Op { order, remove, substitute };

  Kind kind = Kind::literal;
  int radical = 0;  // 1-based
  Op op = Op::order;
  int order = 1;
  char32_t series = 0;  // Op::substitute
  std::string text;     // affix id or literal fidels

  std::string to_string() const;
  friend bool operator==(const TemplateToken&, const TemplateToken&) = default;
};

struct StemPattern {
  std::vector<TamForm> tams;
  std::vector<std::string> classes;  // empty: every class
  std::vector<PatternCondition> conditions;
  bool gap = false;
  std::vector<TemplateToken> tokens;
  std::size_t line = 0;

  bool admits(TamForm t, std::string_view stem_class) const;
  /// Affix ids referenced by {..} tokens.
  std::vector<std::string> affix_refs() const;

  friend bool operator==(const StemPattern& a, const StemPattern& b) {
    return a.tams == b.tams && a.classes == b.classes &&
           a.conditions == b.conditions && a.gap == b.gap && a.tokens == b.tokens;
  }
};

/// Throws std::invalid_argument with a reason.
StemPattern parse_stem_pattern(std::string_view line);
/// Throws ParseError.
std::vector<StemPattern> parse_stem_patterns(std::string_view text,
                                             const std::string& file_name);
std::string format_stem_pattern(const StemPattern& p);

}  // namespace geez
