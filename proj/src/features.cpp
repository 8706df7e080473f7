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

#include "geez/features.hpp"

#include <algorithm>

namespace geez {

std::string_view to_string(TamForm t) {
  switch (t) {
    case TamForm::perfective: return "perfective";
    case TamForm::indicative: return "indicative";
    case TamForm::subjunctive: return "subjunctive";
    case TamForm::jussive: return "jussive";
    case TamForm::gerundive: return "gerundive";
    case TamForm::infinitive: return "infinitive";
  }
  return "?";
}

std::string_view to_string(Png p) {
  static constexpr std::array<std::string_view, 10> kNames = {
      "3ms", "3fs", "3mp", "3fp", "2ms", "2fs", "2mp", "2fp", "1cs", "1cp"};
  return kNames[static_cast<std::size_t>(p)];
}

std::string_view to_string(SlotKind s) {
  switch (s) {
    case SlotKind::prefix: return "prefix";
    case SlotKind::prefix_circumfix: return "prefix_circumfix";
    case SlotKind::stem: return "stem";
    case SlotKind::suffix_circumfix: return "suffix_circumfix";
    case SlotKind::sms: return "sms";
    case SlotKind::oms: return "oms";
  }
  return "?";
}

std::string_view to_string(RegularityFlag f) {
  switch (f) {
    case RegularityFlag::guttural_initial: return "guttural_initial";
    case RegularityFlag::guttural_medial: return "guttural_medial";
    case RegularityFlag::semivowel_any: return "semivowel_any";
    case RegularityFlag::velar_final: return "velar_final";
  }
  return "?";
}

std::string to_string(const FlagSet& flags) {
  std::string out;
  for (RegularityFlag f : flags) {
    if (!out.empty()) out += ',';
    out += to_string(f);
  }
  return out;
}

std::optional<RegularityFlag> parse_flag(std::string_view s) {
  for (RegularityFlag f : kAllRegularityFlags) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::optional<TamForm> parse_tam(std::string_view s) {
  for (TamForm t : kAllTamForms) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::optional<Png> parse_png(std::string_view s) {
  for (Png p : kAllPngs) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::optional<SlotKind> parse_slot(std::string_view s) {
  for (SlotKind k : kAllSlotKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

int person_of(Png p) { return to_string(p)[0] - '0'; }

std::string_view pronoun_of(Png p) {
  static constexpr std::array<std::string_view, 10> kPronouns = {
      "ውእቱ", "ይእቲ", "ውእቶሙ", "ውእቶን", "አንተ",
      "አንቲ", "አንትሙ", "አንትን", "አነ",   "ንሕነ"};
  return kPronouns[static_cast<std::size_t>(p)];
}

bool FeatureConstraint::admits_tam(TamForm t) const {
  return !tams || std::find(tams->begin(), tams->end(), t) != tams->end();
}

bool FeatureConstraint::admits_class(std::string_view c) const {
  return !classes ||
         std::find(classes->begin(), classes->end(), c) != classes->end();
}

bool FeatureConstraint::unifies(const FeatureConstraint& other) const {
  if (tams && other.tams) {
    const bool shared = std::any_of(tams->begin(), tams->end(), [&](TamForm t) {
      return other.admits_tam(t);
    });
    if (!shared) return false;
  }
  if (classes && other.classes) {
    const bool shared =
        std::any_of(classes->begin(), classes->end(),
                    [&](const std::string& c) { return other.admits_class(c); });
    if (!shared) return false;
  }
  if (png && other.png && *png != *other.png) return false;
  return true;
}

std::string to_string(const FeatureBundle& b) {
  std::string out(to_string(b.tam));
  out += '/';
  out += b.stem_class.id;
  out += '/';
  out += to_string(b.subject);
  if (b.object) {
    out += '>';
    out += to_string(*b.object);
  }
  return out;
}

}  // namespace geez
