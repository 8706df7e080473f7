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

// Affix signatures and legal morph sequences. Rule 1 forms are stem plus
// subject marking; rule 2 forms add one object marker after the subject
// marking.

#include <optional>
#include <string>
#include <vector>

#include "geez/features.hpp"
#include "geez/lexicon.hpp"
#include "geez/morph_sequence.hpp"
#include "geez/stemgen.hpp"

namespace geez {

/// Subject marking for one PNG: an sms segment (perfective) or person
/// prefix/suffix segments. A subject with no segments cannot carry an object.
struct SubjectOption {
  Png png = Png::p3ms;
  std::vector<Segment> segments;
  friend bool operator==(const SubjectOption&, const SubjectOption&) = default;
};

struct ObjectOption {
  Png png = Png::p3ms;
  Segment segment;
  friend bool operator==(const ObjectOption&, const ObjectOption&) = default;
};

struct Signature {
  std::string stem_id;  // "<verb>/<tam>/<class>"
  TamForm tam = TamForm::perfective;
  std::string stem_class;
  Segment stem;
  std::vector<SubjectOption> subjects;  // PNG order
  std::vector<ObjectOption> objects;    // PNG order

  /// Affix ids per slot, the stem slot excluded.
  std::vector<std::string> allowed(SlotKind slot) const;
  const SubjectOption* subject(Png p) const;
  const ObjectOption* object(Png p) const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature build_signature(const Stem& stem, const RulePackage& pkg);

struct LegalSequence {
  Png subject = Png::p3ms;
  std::optional<Png> object;
  MorphSequence seq;
};

/// Subjects in PNG order; for each, the bare form first, then one form per
/// object not excluded by `compat`.
std::vector<LegalSequence> legal_sequences(const Signature& sig,
                                           const CompatMatrix& compat);

/// The single sequence for (subject, object), or nullopt when the signature
/// lacks either marker. Throws ExcludedCombination for excluded pairs.
std::optional<MorphSequence> sequence_for(const Signature& sig,
                                          const CompatMatrix& compat, Png subject,
                                          std::optional<Png> object);

}  // namespace geez
