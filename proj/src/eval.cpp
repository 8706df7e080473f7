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

#include "geez/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "geez/errors.hpp"
#include "geez/stemgen.hpp"
#include "geez/utf8.hpp"
#include "text_util.hpp"

namespace geez::eval {
namespace {

namespace fs = std::filesystem;

// Verb, regular?, generated, correct, wrong, printed %.
constexpr std::array<PublishedRow, 30> kRows = {{
    {1, "ፈቀደ", true, 1269, 1269, 0, 100.0},
    {2, "አመነ", false, 590, 563, 27, 95.4},
    {3, "ሠረቀ", false, 1262, 1262, 0, 100.0},
    {4, "ከደነ", true, 1260, 1233, 27, 97.9},
    {5, "ሰበከ", false, 1262, 1262, 0, 100.0},
    {6, "ሐደገ", false, 1262, 1162, 100, 92.0},
    {7, "መሐለ", false, 580, 547, 33, 94.3},
    {8, "ቀነየ", false, 580, 580, 0, 100.0},
    {9, "አበየ", false, 580, 490, 90, 84.4},
    {10, "ጠወየ", false, 580, 570, 10, 98.2},
    {11, "ጠዐመ", false, 1162, 1162, 0, 100.0},
    {12, "ሐፀየ", false, 580, 490, 90, 84.4},
    {13, "ዘበጠ", true, 1262, 1262, 0, 100.0},
    {14, "ሐመመ", false, 580, 580, 0, 100.0},
    {15, "ወለደ", false, 1262, 1262, 0, 100.0},
    {16, "ሐረደ", false, 580, 580, 0, 100.0},
    {17, "ሐለየ", false, 580, 490, 90, 84.5},
    {18, "ፈደየ", false, 580, 580, 0, 100.0},
    {19, "ከወወ", false, 580, 576, 4, 99.3},
    {20, "ተለወ", false, 580, 580, 0, 100.0},
    {21, "ከበበ", true, 1262, 1258, 4, 99.7},
    {22, "ሐተተ", false, 580, 576, 4, 99.3},
    {23, "ወጠነ", false, 580, 551, 29, 95.0},
    {24, "ረወየ", false, 584, 584, 0, 100.0},
    {25, "ለወሰ", false, 1262, 1262, 0, 100.0},
    {26, "ጸደለ", true, 1262, 1262, 0, 100.0},
    {27, "ዘረወ", false, 580, 580, 0, 100.0},
    {28, "ገደፈ", true, 1262, 1262, 0, 100.0},
    {29, "ገረመ", true, 1262, 1262, 0, 100.0},
    {30, "ወቀሰ", false, 1262, 1082, 180, 85.7},
}};

std::string pct(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double percent(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

bool near(double a, double b) { return std::fabs(a - b) <= kPercentTolerance + 1e-9; }

std::string key_of(const FeatureBundle& b) { return to_string(b); }

}  // namespace

std::string_view to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::exceptional_character: return "exceptional_character";
    case ErrorCategory::exceptional_concatenation: return "exceptional_concatenation";
    case ErrorCategory::structural_divergence: return "structural_divergence";
    case ErrorCategory::missing_rule: return "missing_rule";
    case ErrorCategory::uncategorized: return "uncategorized";
  }
  return "?";
}

GoldSet parse_gold(std::string_view text, const std::string& verb,
                   const std::string& source) {
  GoldSet gold{verb, {}, source};
  const auto lines = detail::data_lines(text);
  if (lines.empty()) return gold;
  const std::vector<std::string> header = {"tam", "class", "subject", "object",
                                           "surface"};
  if (detail::split(lines[0].text, '\t', true) != header) {
    throw ParseError(source, lines[0].number,
                     "header must be: tam class subject object surface");
  }
  std::set<std::string> keys;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = detail::split(lines[i].text, '\t', true);
    const std::size_t ln = lines[i].number;
    if (cells.size() != 5) throw ParseError(source, ln, "expected 5 columns");
    GoldEntry e;
    auto tam = parse_tam(cells[0]);
    if (!tam) throw ParseError(source, ln, "unknown TAM form '" + cells[0] + "'");
    e.features.tam = *tam;
    if (cells[1].empty()) throw ParseError(source, ln, "empty class");
    e.features.stem_class = StemClass{cells[1]};
    auto subj = parse_png(cells[2]);
    if (!subj) throw ParseError(source, ln, "unknown subject '" + cells[2] + "'");
    e.features.subject = *subj;
    if (cells[3] != "-") {
      auto obj = parse_png(cells[3]);
      if (!obj) throw ParseError(source, ln, "unknown object '" + cells[3] + "'");
      e.features.object = *obj;
    }
    e.surface = cells[4];
    if (e.surface.empty() || !script::is_ethiopic_text(e.surface)) {
      throw ParseError(source, ln, "surface is not Ethiopic text");
    }
    if (!keys.insert(key_of(e.features)).second) {
      throw DuplicateEntry("gold cell " + key_of(e.features));
    }
    gold.entries.push_back(std::move(e));
  }
  return gold;
}

GoldSet load_gold(const std::filesystem::path& path) {
  std::string text;
  try {
    text = detail::read_file(path);
  } catch (const std::exception&) {
    throw ParseError(path.string(), 0, "cannot read file");
  }
  return parse_gold(text, path.stem().string(), path.string());
}

std::vector<GoldSet> load_gold_dir(const std::filesystem::path& dir) {
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".tsv") {
      files.push_back(de.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<GoldSet> out;
  for (const auto& f : files) out.push_back(load_gold(f));
  return out;
}

double EvalReport::accuracy() const {
  return generated == 0 ? 0.0
                        : static_cast<double>(correct) / static_cast<double>(generated);
}

EvalReport score(const Paradigm& paradigm, const GoldSet& gold,
                 const script::RadicalClassTable& classes) {
  std::unordered_map<std::string, const SurfaceForm*> index;
  for (const SurfaceForm& f : paradigm.forms) index.emplace(key_of(f.features), &f);

  EvalReport r;
  r.label = gold.verb;
  for (const GoldEntry& g : gold.entries) {
    auto it = index.find(key_of(g.features));
    if (it == index.end()) throw GoldKeyUnmatched(gold.verb + " " + key_of(g.features));
    ++r.generated;
    const SurfaceForm& got = *it->second;
    if (got.text == g.surface) {
      ++r.correct;
      continue;
    }
    ++r.wrong;
    const ErrorCategory c = categorize(got, g.surface, paradigm.verb, classes);
    ++r.per_category[c];
    r.mismatches.push_back({g.features, got.text, g.surface, c});
  }
  return r;
}

EvalReport counts_report(std::string label, std::size_t generated,
                         std::size_t correct) {
  if (correct > generated) {
    throw std::invalid_argument("correct count exceeds generated count");
  }
  EvalReport r;
  r.label = std::move(label);
  r.generated = generated;
  r.correct = correct;
  r.wrong = generated - correct;
  return r;
}

EvalReport aggregate(std::span<const EvalReport> reports) {
  if (reports.empty()) throw std::invalid_argument("aggregate needs at least one report");
  if (reports.size() == 1) return reports[0];
  EvalReport total;
  total.label = "total";
  for (const EvalReport& r : reports) {
    total.generated += r.generated;
    total.correct += r.correct;
    total.wrong += r.wrong;
    for (const auto& [c, n] : r.per_category) total.per_category[c] += n;
    total.mismatches.insert(total.mismatches.end(), r.mismatches.begin(),
                            r.mismatches.end());
  }
  return total;
}

ErrorCategory categorize(const SurfaceForm& got, std::string_view expected,
                         const VerbEntry& entry,
                         const script::RadicalClassTable& classes) {
  const std::u32string g = utf8::decode(got.text);
  const std::u32string x = utf8::decode(expected);

  std::size_t p = 0;
  while (p < g.size() && p < x.size() && g[p] == x[p]) ++p;
  std::size_t s = 0;
  while (s < g.size() - p && s < x.size() - p &&
         g[g.size() - 1 - s] == x[x.size() - 1 - s]) {
    ++s;
  }
  const std::size_t g_end = g.size() - s;
  const std::size_t x_end = x.size() - s;

  const FlagSet flags = classify_verb(entry, classes);
  std::set<script::Radical> flagged;
  const std::size_t n = entry.radicals.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool guttural =
        classes.classify(entry.radicals[i]) == script::RadicalClass::guttural;
    if (guttural && i == 0 && flags.contains(RegularityFlag::guttural_initial)) {
      flagged.insert(entry.radicals[i]);
    }
    if (guttural && i > 0 && i + 1 < n && flags.contains(RegularityFlag::guttural_medial)) {
      flagged.insert(entry.radicals[i]);
    }
  }
  if (flags.contains(RegularityFlag::velar_final)) flagged.insert(entry.radicals[n - 1]);

  auto touches_flagged = [&](const std::u32string& w, std::size_t end) {
    for (std::size_t i = p; i < end; ++i) {
      if (script::is_supported(w[i]) && flagged.contains(script::decompose(w[i]).radical)) {
        return true;
      }
    }
    return false;
  };
  if (!flagged.empty() && (touches_flagged(g, g_end) || touches_flagged(x, x_end))) {
    return ErrorCategory::exceptional_character;
  }

  // Boundary offsets in the bare concatenation, with the graphemes on each
  // side.
  std::size_t offset = 0;
  char32_t prev_last = 0;
  for (const Segment& seg : got.segmentation.segments()) {
    const std::u32string m = utf8::decode(seg.morph);
    if (m.empty()) continue;
    if (prev_last != 0 && offset >= p && offset <= std::max(g_end, p) &&
        script::is_supported(prev_last) && script::is_supported(m.front()) &&
        script::decompose(prev_last).radical == script::decompose(m.front()).radical) {
      return ErrorCategory::exceptional_concatenation;
    }
    offset += m.size();
    prev_last = m.back();
  }

  if (got.text == got.segmentation.concatenation()) return ErrorCategory::missing_rule;
  if (!flags.empty()) return ErrorCategory::structural_divergence;
  return ErrorCategory::uncategorized;
}

std::span<const PublishedRow> published_rows() { return kRows; }

const PublishedClaims& published_claims() {
  static const PublishedClaims claims;
  return claims;
}

std::vector<AuditFinding> audit_published() {
  const PublishedClaims& c = published_claims();
  std::size_t gen = 0, cor = 0, wrong = 0;
  std::size_t reg_gen = 0, reg_wrong = 0, reg_rows = 0;
  std::vector<std::string> row_mismatch;
  for (const PublishedRow& r : kRows) {
    gen += r.generated;
    cor += r.correct;
    wrong += r.wrong;
    if (r.regular) {
      reg_gen += r.generated;
      reg_wrong += r.wrong;
      ++reg_rows;
    }
    if (r.generated - r.correct != r.wrong ||
        !near(percent(r.correct, r.generated), r.printed_accuracy)) {
      row_mismatch.push_back(std::string(r.verb));
    }
  }
  const std::size_t irr_gen = gen - reg_gen;
  const std::size_t irr_wrong = wrong - reg_wrong;

  std::vector<AuditFinding> out;
  out.push_back({"row_percentages", row_mismatch.empty(),
                 row_mismatch.empty()
                     ? "all 30 row accuracies recompute to their printed value within 0.1 points"
                     : "rows whose printed accuracy does not recompute: " +
                           detail::join(row_mismatch, ", ")});
  out.push_back({"table_totals",
                 gen == c.table_generated && cor == c.table_correct && wrong == c.table_wrong,
                 "row sums: generated " + std::to_string(gen) + ", correct " +
                     std::to_string(cor) + ", wrong " + std::to_string(wrong) +
                     " (printed totals " + std::to_string(c.table_generated) + " / " +
                     std::to_string(c.table_correct) + " / " +
                     std::to_string(c.table_wrong) + ")"});
  const double acc = percent(cor, gen);
  out.push_back({"overall_accuracy", near(acc, c.table_accuracy),
                 "recomputed accuracy " + pct(acc) + "% vs printed " +
                     pct(c.table_accuracy, 1) + "%"});
  out.push_back({"error_count", c.total_errors == wrong,
                 "prose reports " + std::to_string(c.total_errors) +
                     " errors; the table totals " + std::to_string(wrong)});
  out.push_back({"error_split", c.regular_errors + c.irregular_errors == c.total_errors,
                 "regular + irregular errors = " + std::to_string(c.regular_errors) + " + " +
                     std::to_string(c.irregular_errors) + " = " +
                     std::to_string(c.regular_errors + c.irregular_errors) +
                     ", stated total " + std::to_string(c.total_errors)});
  out.push_back({"generated_split",
                 c.regular_generated + c.irregular_generated == c.table_generated,
                 "regular + irregular generated = " +
                     std::to_string(c.regular_generated + c.irregular_generated) +
                     ", table total " + std::to_string(c.table_generated)});
  out.push_back({"regular_rows", reg_gen == c.regular_generated,
                 "the " + std::to_string(reg_rows) + " rows labelled regular sum to " +
                     std::to_string(reg_gen) + " generated (" + std::to_string(reg_wrong) +
                     " wrong); prose states " + std::to_string(c.regular_generated) +
                     " regular and " + std::to_string(c.irregular_generated) +
                     " irregular, rows give " + std::to_string(irr_gen) + " irregular (" +
                     std::to_string(irr_wrong) + " wrong)"});
  const double with_stated = 100.0 - percent(c.regular_errors, c.regular_generated);
  const std::size_t implied = static_cast<std::size_t>(std::lround(
      static_cast<double>(c.regular_generated) * (100.0 - c.regular_accuracy) / 100.0));
  out.push_back({"regular_accuracy", near(with_stated, c.regular_accuracy),
                 "stated " + pct(c.regular_accuracy, 1) + "%: " +
                     std::to_string(c.regular_errors) + " errors over " +
                     std::to_string(c.regular_generated) + " gives " + pct(with_stated) +
                     "%, while " + pct(c.regular_accuracy, 1) + "% implies about " +
                     std::to_string(implied) + " errors; the regular rows give " +
                     pct(100.0 - percent(reg_wrong, reg_gen)) + "%"});
  const double irr = 100.0 - percent(c.irregular_errors, c.irregular_generated);
  out.push_back({"irregular_accuracy", near(irr, c.irregular_accuracy),
                 std::to_string(c.irregular_errors) + " errors over " +
                     std::to_string(c.irregular_generated) + " gives " + pct(irr) +
                     "% vs stated " + pct(c.irregular_accuracy, 1) + "%"});
  const double rate = percent(wrong, gen);
  out.push_back({"error_rate", near(rate, c.error_rate),
                 "table error rate " + pct(rate) + "% vs stated " + pct(c.error_rate, 1) + "%"});
  return out;
}

}  // namespace geez::eval
