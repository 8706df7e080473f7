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

#include "geez/synthesizer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "geez/errors.hpp"
#include "geez/morphotactics.hpp"
#include "geez/stemgen.hpp"

namespace geez {
namespace {

bool contains(const std::optional<std::vector<TamForm>>& v, TamForm t) {
  return !v || std::find(v->begin(), v->end(), t) != v->end();
}

bool contains(const std::optional<std::vector<std::string>>& v,
              const std::string& c) {
  return !v || std::find(v->begin(), v->end(), c) != v->end();
}

std::string cell_name(TamForm tam, const std::string& cls) {
  return std::string(to_string(tam)) + "/" + cls;
}

SurfaceForm realize_cell(const FeatureBundle& b, MorphSequence seq,
                         const RulePackage& pkg) {
  auto r = orthography::realize(seq, pkg.rules, pkg.classes);
  return SurfaceForm{b, std::move(r.surface), std::move(r.trace), std::move(seq)};
}

}  // namespace

const SurfaceForm* Paradigm::find(const FeatureBundle& b) const {
  for (const SurfaceForm& f : forms) {
    if (f.features == b) return &f;
  }
  return nullptr;
}

SurfaceForm synthesize(const VerbEntry& entry, const FeatureBundle& features,
                       const RulePackage& pkg) {
  if (!pkg.class_index(features.stem_class.id)) {
    throw DanglingReference(features.stem_class.id, "feature bundle");
  }
  if (features.object && pkg.compat.excluded(features.subject, *features.object)) {
    throw ExcludedCombination(std::string(to_string(features.subject)) + ">" +
                              std::string(to_string(*features.object)));
  }
  const auto stem = generate_stem(entry, features.tam, features.stem_class.id, pkg);
  if (!stem) {
    throw MissingPattern(std::string(to_string(features.tam)),
                         features.stem_class.id, "declared gap");
  }
  const Signature sig = build_signature(*stem, pkg);
  const SubjectOption* s = sig.subject(features.subject);
  if (s == nullptr) {
    throw NoMatchingAffix(features.tam == TamForm::perfective ? "sms" : "person",
                          to_string(features));
  }
  if (features.object && (sig.object(*features.object) == nullptr ||
                          s->segments.empty())) {
    throw NoMatchingAffix("oms", to_string(features));
  }
  auto seq = sequence_for(sig, pkg.compat, features.subject, features.object);
  return realize_cell(features, std::move(*seq), pkg);
}

Paradigm generate_paradigm(const VerbEntry& entry, const RulePackage& pkg,
                           const ParadigmFilter& filter) {
  Paradigm p;
  p.verb = entry;
  for (TamForm tam : kAllTamForms) {
    if (!contains(filter.tams, tam)) continue;
    for (const StemClassDef& cls : pkg.stem_classes) {
      if (!contains(filter.classes, cls.id)) continue;
      std::optional<Stem> stem;
      try {
        stem = generate_stem(entry, tam, cls.id, pkg);
      } catch (const MissingPattern& e) {
        p.diagnostics.push_back({"missing_pattern", cell_name(tam, cls.id), e.what()});
        continue;
      } catch (const std::exception& e) {
        p.diagnostics.push_back({"stem_error", cell_name(tam, cls.id), e.what()});
        continue;
      }
      if (!stem) continue;
      const Signature sig = build_signature(*stem, pkg);
      if (sig.subjects.empty()) {
        p.diagnostics.push_back({"empty_signature", cell_name(tam, cls.id),
                                 "no subject marking for " + sig.stem_id});
        continue;
      }
      for (LegalSequence& ls : legal_sequences(sig, pkg.compat)) {
        if (filter.subject && ls.subject != *filter.subject) continue;
        if (filter.no_object && ls.object) continue;
        if (filter.object && ls.object != filter.object) continue;
        const FeatureBundle b{tam, StemClass{cls.id}, ls.subject, ls.object};
        try {
          p.forms.push_back(realize_cell(b, std::move(ls.seq), pkg));
        } catch (const ConflictingRules& e) {
          p.diagnostics.push_back({"conflicting_rules", to_string(b), e.what()});
        }
      }
    }
  }
  return p;
}

BatchResult batch_generate(std::span<const VerbEntry> entries,
                           const RulePackage& pkg, unsigned threads) {
  BatchResult out;
  out.paradigms.resize(entries.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      out.paradigms[i] = generate_paradigm(entries[i], pkg);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const Paradigm& p : out.paradigms) {
    out.total_forms += p.forms.size();
    out.total_diagnostics += p.diagnostics.size();
  }
  return out;
}

std::optional<std::string> infinitive_form(const VerbEntry& entry,
                                           const RulePackage& pkg) {
  if (pkg.stem_classes.empty()) return std::nullopt;
  try {
    const FeatureBundle b{TamForm::infinitive, StemClass{pkg.stem_classes[0].id},
                          Png::p3ms, std::nullopt};
    return synthesize(entry, b, pkg).text;
  } catch (const Error&) {
    return std::nullopt;
  }
}

const VerbEntry* lookup_verb(std::span<const VerbEntry> entries,
                             std::string_view form, const RulePackage& pkg) {
  if (const VerbEntry* e = find_verb(entries, form)) return e;
  for (const VerbEntry& e : entries) {
    if (infinitive_form(e, pkg) == form) return &e;
  }
  return nullptr;
}

}  // namespace geez
