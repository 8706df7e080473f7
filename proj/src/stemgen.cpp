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

#include "geez/stemgen.hpp"

#include <tuple>

#include "geez/errors.hpp"
#include "geez/utf8.hpp"

namespace geez {
namespace {

using script::RadicalClass;

bool satisfied(const PatternCondition& c, const VerbEntry& e,
               const FlagSet& flags, const script::RadicalClassTable& classes) {
  const int n = static_cast<int>(e.radicals.size());
  switch (c.kind) {
    case PatternCondition::Kind::any: return true;
    case PatternCondition::Kind::regular: return flags.empty();
    case PatternCondition::Kind::flag: return flags.contains(c.flag);
    case PatternCondition::Kind::radical_count: return n == c.a;
    case PatternCondition::Kind::radicals_equal:
      return c.a <= n && c.b <= n && e.radicals[c.a - 1] == e.radicals[c.b - 1];
    case PatternCondition::Kind::radical_class:
      return c.a <= n && classes.classify(e.radicals[c.a - 1]) == c.radical_class;
    case PatternCondition::Kind::verb: return e.infinitive == c.verb;
  }
  return false;
}

// Every radical is consumed exactly once and no token points past the root.
bool consumes_root(const StemPattern& p, std::size_t n) {
  std::vector<int> uses(n, 0);
  for (const TemplateToken& t : p.tokens) {
    if (t.kind != TemplateToken::Kind::radical) continue;
    if (t.radical < 1 || static_cast<std::size_t>(t.radical) > n) return false;
    ++uses[static_cast<std::size_t>(t.radical - 1)];
  }
  for (int u : uses) {
    if (u != 1) return false;
  }
  return true;
}

std::string apply_template(const StemPattern& p, const VerbEntry& e,
                           const RulePackage& pkg) {
  std::u32string out;
  for (const TemplateToken& t : p.tokens) {
    switch (t.kind) {
      case TemplateToken::Kind::literal:
        out += utf8::decode(t.text);
        break;
      case TemplateToken::Kind::affix: {
        const Affix* a = pkg.find_affix(t.text);
        if (a == nullptr) throw DanglingReference(t.text, "stem pattern");
        out += utf8::decode(a->form);
        break;
      }
      case TemplateToken::Kind::radical: {
        const script::Radical& r = e.radicals[static_cast<std::size_t>(t.radical - 1)];
        switch (t.op) {
          case TemplateToken::Op::remove:
            break;
          case TemplateToken::Op::order:
            out += script::compose({r, script::Order(t.order)});
            break;
          case TemplateToken::Op::substitute:
            out += script::compose({script::Radical(t.series), script::Order(t.order)});
            break;
        }
        break;
      }
    }
  }
  return utf8::encode(out);
}

std::string describe_flags(const FlagSet& flags) {
  return flags.empty() ? std::string("regular") : to_string(flags);
}

}  // namespace

FlagSet classify_verb(const VerbEntry& entry,
                      const script::RadicalClassTable& classes) {
  FlagSet flags;
  const std::size_t n = entry.radicals.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RadicalClass c = classes.classify(entry.radicals[i]);
    if (c == RadicalClass::guttural) {
      if (i == 0) {
        flags.insert(RegularityFlag::guttural_initial);
      } else if (i + 1 < n) {
        flags.insert(RegularityFlag::guttural_medial);
      }
    }
    if (c == RadicalClass::semivowel) flags.insert(RegularityFlag::semivowel_any);
  }
  if (n > 0 && classes.classify(entry.radicals[n - 1]) == RadicalClass::velar) {
    flags.insert(RegularityFlag::velar_final);
  }
  return flags;
}

const StemPattern* select_pattern(const VerbEntry& entry, const FlagSet& flags,
                                  TamForm tam, std::string_view stem_class,
                                  const RulePackage& pkg) {
  const StemPattern* best = nullptr;
  std::tuple<bool, std::size_t, bool> best_rank{};
  for (const StemPattern& p : pkg.patterns) {
    if (!p.admits(tam, stem_class)) continue;
    bool per_verb = false;
    bool ok = true;
    for (const PatternCondition& c : p.conditions) {
      if (!satisfied(c, entry, flags, pkg.classes)) {
        ok = false;
        break;
      }
      per_verb = per_verb || c.kind == PatternCondition::Kind::verb;
    }
    if (!ok) continue;
    if (!p.gap && !consumes_root(p, entry.radicals.size())) continue;
    const std::tuple<bool, std::size_t, bool> rank{per_verb, p.conditions.size(),
                                                   !p.classes.empty()};
    if (best == nullptr || rank > best_rank) {
      best = &p;
      best_rank = rank;
    }
  }
  return best;
}

std::optional<Stem> generate_stem(const VerbEntry& entry, TamForm tam,
                                  std::string_view stem_class,
                                  const RulePackage& pkg) {
  const FlagSet flags = classify_verb(entry, pkg.classes);
  const StemPattern* p = select_pattern(entry, flags, tam, stem_class, pkg);
  if (p == nullptr) {
    throw MissingPattern(std::string(to_string(tam)), std::string(stem_class),
                         describe_flags(flags));
  }
  if (p->gap) return std::nullopt;

  Stem stem;
  stem.verb = entry.infinitive;
  stem.tam = tam;
  stem.stem_class = StemClass{std::string(stem_class)};
  stem.form = apply_template(*p, entry, pkg);
  stem.pattern_line = p->line;
  if (stem.form.empty()) {
    throw MissingPattern(std::string(to_string(tam)), std::string(stem_class),
                         describe_flags(flags) + "; template deletes every radical");
  }
  if (tam != TamForm::perfective) {
    for (Png png : kAllPngs) {
      const PersonMarker* m = pkg.person_marker(tam, stem_class, png);
      if (m == nullptr) continue;
      PersonSlot slot;
      if (!m->prefix_id.empty()) {
        slot.prefix_id = m->prefix_id;
        slot.prefix = pkg.find_affix(m->prefix_id)->form;
      }
      if (!m->suffix_id.empty()) {
        slot.suffix_id = m->suffix_id;
        slot.suffix = pkg.find_affix(m->suffix_id)->form;
      }
      stem.person_prefix_slot[static_cast<std::size_t>(png)] = std::move(slot);
    }
  }
  return stem;
}

StemSet generate_stems(const VerbEntry& entry, const RulePackage& pkg) {
  StemSet out;
  for (TamForm tam : kAllTamForms) {
    for (const StemClassDef& c : pkg.stem_classes) {
      try {
        if (auto s = generate_stem(entry, tam, c.id, pkg)) {
          out.stems.push_back(std::move(*s));
        }
      } catch (const std::exception& e) {
        out.diagnostics.push_back({tam, c.id, e.what()});
      }
    }
  }
  return out;
}

}  // namespace geez
