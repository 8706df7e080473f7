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

#include <string>
#include <vector>

#include "geez/features.hpp"

namespace geez {

/// One filled slot. An empty `morph` is a zero morph (written ∅ in data).
struct Segment {
  SlotKind kind = SlotKind::stem;
  std::string morph;
  std::string affix_id;  // empty for the stem

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Morphs in template order:
/// [prefix][prefix_circumfix][stem][suffix_circumfix][sms][oms].
class MorphSequence {
 public:
  MorphSequence() = default;

  /// Throws std::invalid_argument unless the segments follow the template
  /// with at most one morph per slot and a stem present.
  static MorphSequence make(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  bool has(SlotKind kind) const;
  const Segment* find(SlotKind kind) const;

  /// Lexical string with boundary markers, e.g. "ቀተለ+ኩ"; zero morphs as ∅.
  std::string lexical() const;
  /// Boundary-free concatenation of the morphs.
  std::string concatenation() const;

  friend bool operator==(const MorphSequence&, const MorphSequence&) = default;

 private:
  explicit MorphSequence(std::vector<Segment> s) : segments_(std::move(s)) {}
  std::vector<Segment> segments_;
};

inline constexpr std::string_view kZeroMorph = "∅";

}  // namespace geez
