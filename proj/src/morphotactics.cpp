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

#include "geez/morphotactics.hpp"

#include "geez/errors.hpp"

namespace geez {
namespace {

MorphSequence assemble(const Signature& sig, const SubjectOption& s,
                       const ObjectOption* o) {
  std::vector<Segment> segs;
  for (const Segment& seg : s.segments) {
    if (seg.kind == SlotKind::prefix || seg.kind == SlotKind::prefix_circumfix) {
      segs.push_back(seg);
    }
  }
  segs.push_back(sig.stem);
  for (const Segment& seg : s.segments) {
    if (seg.kind == SlotKind::suffix_circumfix || seg.kind == SlotKind::sms) {
      segs.push_back(seg);
    }
  }
  if (o != nullptr) segs.push_back(o->segment);
  return MorphSequence::make(std::move(segs));
}

}  // namespace

std::vector<std::string> Signature::allowed(SlotKind slot) const {
  std::vector<std::string> out;
  if (slot == SlotKind::oms) {
    for (const ObjectOption& o : objects) out.push_back(o.segment.affix_id);
    return out;
  }
  for (const SubjectOption& s : subjects) {
    for (const Segment& seg : s.segments) {
      if (seg.kind != slot) continue;
      bool seen = false;
      for (const std::string& id : out) seen = seen || id == seg.affix_id;
      if (!seen) out.push_back(seg.affix_id);
    }
  }
  return out;
}

const SubjectOption* Signature::subject(Png p) const {
  for (const SubjectOption& s : subjects) {
    if (s.png == p) return &s;
  }
  return nullptr;
}

const ObjectOption* Signature::object(Png p) const {
  for (const ObjectOption& o : objects) {
    if (o.png == p) return &o;
  }
  return nullptr;
}

Signature build_signature(const Stem& stem, const RulePackage& pkg) {
  Signature sig;
  sig.stem_id = stem.verb + "/" + std::string(to_string(stem.tam)) + "/" +
                stem.stem_class.id;
  sig.tam = stem.tam;
  sig.stem_class = stem.stem_class.id;
  sig.stem = Segment{SlotKind::stem, stem.form, ""};

  FeatureConstraint c;
  c.tams = std::vector<TamForm>{stem.tam};
  c.classes = std::vector<std::string>{stem.stem_class.id};

  if (stem.tam == TamForm::perfective) {
    for (const Affix* a : pkg.affixes_for(SlotKind::sms, c)) {
      if (sig.subject(*a->features.png) != nullptr) continue;
      sig.subjects.push_back(
          {*a->features.png, {Segment{SlotKind::sms, a->form, a->id}}});
    }
  } else {
    for (Png png : kAllPngs) {
      const auto& slot = stem.person(png);
      if (!slot) continue;
      SubjectOption s{png, {}};
      if (!slot->prefix_id.empty()) {
        s.segments.push_back({SlotKind::prefix_circumfix, slot->prefix, slot->prefix_id});
      }
      if (!slot->suffix_id.empty()) {
        s.segments.push_back({SlotKind::suffix_circumfix, slot->suffix, slot->suffix_id});
      }
      sig.subjects.push_back(std::move(s));
    }
  }
  for (const Affix* a : pkg.affixes_for(SlotKind::oms, c)) {
    if (sig.object(*a->features.png) != nullptr) continue;
    sig.objects.push_back({*a->features.png, Segment{SlotKind::oms, a->form, a->id}});
  }
  return sig;
}

std::vector<LegalSequence> legal_sequences(const Signature& sig,
                                           const CompatMatrix& compat) {
  std::vector<LegalSequence> out;
  for (const SubjectOption& s : sig.subjects) {
    out.push_back({s.png, std::nullopt, assemble(sig, s, nullptr)});
    if (s.segments.empty()) continue;
    for (const ObjectOption& o : sig.objects) {
      if (compat.excluded(s.png, o.png)) continue;
      out.push_back({s.png, o.png, assemble(sig, s, &o)});
    }
  }
  return out;
}

std::optional<MorphSequence> sequence_for(const Signature& sig,
                                          const CompatMatrix& compat, Png subject,
                                          std::optional<Png> object) {
  if (object && compat.excluded(subject, *object)) {
    throw ExcludedCombination(std::string(to_string(subject)) + ">" +
                              std::string(to_string(*object)));
  }
  const SubjectOption* s = sig.subject(subject);
  if (s == nullptr) return std::nullopt;
  if (!object) return assemble(sig, *s, nullptr);
  const ObjectOption* o = sig.object(*object);
  if (o == nullptr || s->segments.empty()) return std::nullopt;
  return assemble(sig, *s, o);
}

}  // namespace geez
