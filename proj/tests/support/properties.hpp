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

// Property suites shared by the unit tests and the acceptance runner. Each
// returns a case count and a failure count; randomized suites use a fixed
// seed so failures reproduce.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "geez/errors.hpp"
#include "geez/lexicon.hpp"
#include "geez/morphotactics.hpp"
#include "geez/orthography.hpp"
#include "geez/script.hpp"
#include "geez/stemgen.hpp"
#include "geez/synthesizer.hpp"
#include "geez/utf8.hpp"

#ifndef GEEZ_SOURCE_DIR
#define GEEZ_SOURCE_DIR "."
#endif

namespace geez::testing {

inline std::filesystem::path source_dir() { return GEEZ_SOURCE_DIR; }
inline std::filesystem::path seed_rules_dir() { return source_dir() / "data/rules/seed"; }
inline std::filesystem::path seed_lexicon_path() { return source_dir() / "data/lexicon/seed.tsv"; }
inline std::filesystem::path appendix_lexicon_path() {
  return source_dir() / "data/lexicon/appendix_i.tsv";
}
inline std::filesystem::path gold_dir() { return source_dir() / "fixtures/gold"; }

inline const RulePackage& seed_package() {
  static const RulePackage pkg = load_rule_package(seed_rules_dir());
  return pkg;
}

inline const std::vector<VerbEntry>& seed_lexicon() {
  static const std::vector<VerbEntry> lex = load_lexicon(seed_lexicon_path());
  return lex;
}

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// The 37 first-order series glyphs and the 20 labiovelar glyphs, typed out
// rather than taken from the library tables.
inline constexpr std::string_view kSeriesGlyphs =
    "ሀለሐመሠረሰሸቀቐበቨተቸኀነኘአከኸወዐዘዠየደዸጀገጘጠጨጰጸፀፈፐ";
inline constexpr std::string_view kLabiovelarGlyphs =
    "ቈቊቋቌቍኈኊኋኌኍኰኲኳኴኵጐጒጓጔጕ";

/// decompose/compose/reorder over the whole Ethiopic block and its
/// neighbours, checked against code-point arithmetic.
inline PropertyResult script_round_trip() {
  PropertyResult r{"script round-trip"};
  const std::u32string series = utf8::decode(kSeriesGlyphs);
  const std::u32string labio = utf8::decode(kLabiovelarGlyphs);
  auto expected_supported = [&](char32_t ch) {
    if (labio.find(ch) != std::u32string::npos) return true;
    return (ch & 7u) != 7u && series.find(ch & ~char32_t{7}) != std::u32string::npos;
  };
  for (char32_t ch = 0x1180; ch <= 0x13A0; ++ch) {
    ++r.cases;
    const bool want = expected_supported(ch);
    if (script::is_supported(ch) != want) {
      r.fail("support mismatch at U+" + std::to_string(static_cast<unsigned>(ch)));
      continue;
    }
    if (!want) {
      try {
        script::decompose(ch);
        r.fail("decompose accepted unsupported U+" + std::to_string(static_cast<unsigned>(ch)));
      } catch (const script::UnsupportedGrapheme&) {
      }
      continue;
    }
    const script::Fidel f = script::decompose(ch);
    const bool opaque = labio.find(ch) != std::u32string::npos;
    const char32_t base = opaque ? ch : (ch & ~char32_t{7});
    const int order = opaque ? 1 : static_cast<int>(ch & 7u) + 1;
    if (f.radical.base() != base || f.order.index() != order) {
      r.fail("decompose mismatch at U+" + std::to_string(static_cast<unsigned>(ch)));
      continue;
    }
    if (script::compose(f) != ch) r.fail("compose(decompose) mismatch");
    if (!opaque) {
      for (int o = 1; o <= 7; ++o) {
        ++r.cases;
        const char32_t moved = script::reorder(ch, o);
        if (moved != base + static_cast<char32_t>(o - 1) ||
            script::decompose(moved).radical != f.radical) {
          r.fail("reorder mismatch");
        }
      }
    }
  }
  if (script::supported_scalars().size() != series.size() * 7 + labio.size()) {
    r.fail("supported_scalars size");
  }
  return r;
}

inline std::vector<script::Radical> plain_radicals() {
  std::vector<script::Radical> out;
  for (const auto& rad : script::supported_radicals()) {
    if (!rad.opaque()) out.push_back(rad);
  }
  return out;
}

inline VerbEntry random_verb(std::mt19937_64& rng) {
  static const std::vector<script::Radical> rads = plain_radicals();
  std::uniform_int_distribution<std::size_t> pick(0, rads.size() - 1);
  VerbEntry e;
  for (int i = 0; i < 3; ++i) e.radicals.push_back(rads[pick(rng)]);
  if (rng() % 5 == 0) e.radicals[2] = e.radicals[1];
  for (const auto& rad : e.radicals) e.infinitive += rad.id();
  e.flags = classify_verb(e);
  return e;
}

/// Legal morph sequences drawn from random tri-radical roots run through
/// the seed package's stems and signatures.
inline std::vector<MorphSequence> random_sequences(const RulePackage& pkg, std::size_t n,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MorphSequence> out;
  out.reserve(n);
  while (out.size() < n) {
    const VerbEntry e = random_verb(rng);
    const TamForm tam = kAllTamForms[rng() % kAllTamForms.size()];
    const auto& cls = pkg.stem_classes[rng() % pkg.stem_classes.size()];
    std::optional<Stem> stem;
    try {
      stem = generate_stem(e, tam, cls.id, pkg);
    } catch (const Error&) {
      continue;
    }
    if (!stem) continue;
    auto seqs = legal_sequences(build_signature(*stem, pkg), pkg.compat);
    if (seqs.empty()) continue;
    for (int k = 0; k < 4 && out.size() < n; ++k) {
      out.push_back(std::move(seqs[rng() % seqs.size()].seq));
    }
  }
  return out;
}

/// Sequences of random graphemes in random slot layouts.
inline std::vector<MorphSequence> random_raw_sequences(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto scalars = script::supported_scalars();
  auto morph = [&](std::size_t max_len) {
    std::u32string s;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) s.push_back(scalars[rng() % scalars.size()]);
    return utf8::encode(s);
  };
  std::vector<MorphSequence> out;
  out.reserve(n);
  while (out.size() < n) {
    std::vector<Segment> segs;
    for (SlotKind k : kAllSlotKinds) {
      if (k == SlotKind::stem) {
        std::string stem = morph(4);
        if (stem.empty()) stem = "ቀ";
        segs.push_back({k, stem, ""});
      } else if (rng() % 2 == 0) {
        segs.push_back({k, morph(2), "x"});
      }
    }
    out.push_back(MorphSequence::make(std::move(segs)));
  }
  return out;
}

/// Realizing with no rules returns the plain concatenation.
inline PropertyResult orthography_identity(const std::vector<MorphSequence>& seqs) {
  PropertyResult r{"orthography identity"};
  for (const MorphSequence& s : seqs) {
    ++r.cases;
    const auto out = orthography::realize(s, {});
    if (out.surface != s.concatenation() || !out.trace.applied.empty()) {
      r.fail("identity failed for " + s.lexical());
    }
  }
  return r;
}

/// Same input, same output: repeated runs and a shuffled rule list agree on
/// surface and trace, or fail identically.
inline PropertyResult orthography_determinism(const std::vector<MorphSequence>& seqs,
                                              const RulePackage& pkg, std::uint64_t seed) {
  PropertyResult r{"orthography determinism"};
  std::vector<orthography::OrthoRule> shuffled = pkg.rules;
  std::mt19937_64 rng(seed);
  auto outcome = [&](const MorphSequence& s, const std::vector<orthography::OrthoRule>& rules) {
    try {
      auto o = orthography::realize(s, rules, pkg.classes);
      std::ostringstream ss;
      ss << o.surface << '|' << o.trace.input << '|' << o.trace.output;
      for (const auto& a : o.trace.applied) {
        ss << '|' << a.rule_id << '@' << a.boundary << ':' << a.position << ':'
           << a.consumed_left << '+' << a.consumed_right << '>' << a.replacement;
      }
      return ss.str();
    } catch (const ConflictingRules& e) {
      return std::string("conflict");
    }
  };
  for (const MorphSequence& s : seqs) {
    ++r.cases;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::string a = outcome(s, pkg.rules);
    if (outcome(s, pkg.rules) != a || outcome(s, shuffled) != a) {
      r.fail("nondeterministic realization of " + s.lexical());
    }
  }
  return r;
}

/// Replaying the recorded rewrites over the lexical input reproduces the
/// output, and the output is the returned surface.
inline PropertyResult orthography_trace_soundness(const std::vector<MorphSequence>& seqs,
                                                  const RulePackage& pkg) {
  PropertyResult r{"orthography trace soundness"};
  for (const MorphSequence& s : seqs) {
    orthography::Realization o;
    try {
      o = orthography::realize(s, pkg.rules, pkg.classes);
    } catch (const ConflictingRules&) {
      continue;
    }
    ++r.cases;
    try {
      if (o.trace.output != o.surface || orthography::replay(o.trace) != o.surface ||
          o.trace.input != s.lexical()) {
        r.fail("trace does not replay for " + s.lexical());
      }
    } catch (const std::exception& e) {
      r.fail(std::string("replay threw for ") + s.lexical() + ": " + e.what());
    }
  }
  return r;
}

/// legal_sequences against a cartesian brute force, over every signature with
/// at most five affixes drawn from the ten subjects and ten objects, each
/// under a random compat matrix.
inline PropertyResult morphotactics_count(std::uint64_t seed) {
  PropertyResult r{"morphotactics brute-force count"};
  std::mt19937_64 rng(seed);
  std::vector<Png> pngs(kAllPngs.begin(), kAllPngs.end());

  auto subject_option = [&](Png p) {
    SubjectOption s{p, {}};
    // Every fourth PNG carries no marking, as the jussive 2nd persons do.
    if ((static_cast<unsigned>(p) + rng()) % 4 != 0) {
      s.segments.push_back({SlotKind::sms, "ኩ", "sms.test"});
    }
    return s;
  };

  // Enumerate subsets of the 20 affix choices by increasing bitmask.
  for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
    if (std::popcount(mask) > 5) continue;
    Signature sig;
    sig.stem = {SlotKind::stem, "ቀተል", ""};
    for (std::size_t i = 0; i < 10; ++i) {
      if (mask & (1u << i)) sig.subjects.push_back(subject_option(pngs[i]));
      if (mask & (1u << (10 + i))) {
        sig.objects.push_back({pngs[i], {SlotKind::oms, "ኒ", "oms.test"}});
      }
    }
    CompatMatrix compat;
    for (const auto& s : sig.subjects) {
      for (const auto& o : sig.objects) {
        if (rng() % 3 == 0) compat.excluded_pairs.insert({s.png, o.png});
      }
    }

    std::size_t brute = 0;
    for (const auto& s : sig.subjects) {
      ++brute;  // bare form
      if (s.segments.empty()) continue;
      for (const auto& o : sig.objects) {
        if (!compat.excluded(s.png, o.png)) ++brute;
      }
    }
    ++r.cases;
    const auto seqs = legal_sequences(sig, compat);
    if (seqs.size() != brute) {
      r.fail("count mismatch for mask " + std::to_string(mask));
      continue;
    }
    for (const auto& ls : seqs) {
      if (ls.object && !ls.seq.has(SlotKind::oms)) r.fail("object without oms segment");
      if (ls.object && compat.excluded(ls.subject, *ls.object)) r.fail("excluded pair emitted");
    }
  }
  return r;
}

inline std::string serialize(const Paradigm& p) {
  std::string out = p.verb.infinitive + "\n";
  for (const SurfaceForm& f : p.forms) {
    out += to_string(f.features) + "\t" + f.text + "\t" + f.segmentation.lexical();
    for (const auto& a : f.trace.applied) out += "\t" + a.rule_id;
    out += "\n";
  }
  for (const Diagnostic& d : p.diagnostics) out += d.kind + "\t" + d.cell + "\n";
  return out;
}

inline std::string serialize(const BatchResult& b) {
  std::string out;
  for (const Paradigm& p : b.paradigms) out += serialize(p);
  return out;
}

/// Single-threaded reference against batch runs at several thread counts
/// and against eight concurrent batch runs.
inline PropertyResult synthesizer_parallel_determinism(const std::vector<VerbEntry>& lex,
                                                       const RulePackage& pkg) {
  PropertyResult r{"synthesizer 8-way determinism"};
  const std::string reference = serialize(batch_generate(lex, pkg, 1));
  for (unsigned threads : {2u, 4u, 8u}) {
    ++r.cases;
    if (serialize(batch_generate(lex, pkg, threads)) != reference) {
      r.fail("batch with " + std::to_string(threads) + " threads differs");
    }
  }
  std::array<std::string, 8> outputs;
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      pool.emplace_back([&, i] { outputs[i] = serialize(batch_generate(lex, pkg, 8)); });
    }
  }
  for (const std::string& o : outputs) {
    ++r.cases;
    if (o != reference) r.fail("concurrent batch run differs");
  }
  return r;
}

}  // namespace geez::testing
