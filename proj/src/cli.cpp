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

#include "geez/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "geez/errors.hpp"
#include "geez/eval.hpp"
#include "geez/lexicon.hpp"
#include "geez/orthography.hpp"
#include "geez/stemgen.hpp"
#include "geez/synthesizer.hpp"
#include "geez/utf8.hpp"
#include "text_util.hpp"

namespace geez::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCombination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string rules;
  std::string lexicon;
  std::string format = "table";
};

RulePackage require_package(const Options& o) {
  if (o.rules.empty()) throw UsageError("--rules DIR (or GEEZ_RULES) is required");
  return load_rule_package(o.rules);
}

std::vector<VerbEntry> require_lexicon(const Options& o) {
  if (o.lexicon.empty()) throw UsageError("--lexicon FILE (or GEEZ_LEXICON) is required");
  return load_lexicon(o.lexicon);
}

const VerbEntry& require_verb(const std::vector<VerbEntry>& lex, const std::string& verb,
                              const RulePackage& pkg) {
  const VerbEntry* e = lookup_verb(lex, verb, pkg);
  if (e == nullptr) throw UnknownVerb(verb);
  return *e;
}

Png require_png(const std::string& s, const char* what) {
  auto p = parse_png(s);
  if (!p) throw UsageError(std::string("unknown ") + what + " '" + s + "'");
  return *p;
}

TamForm require_tam(const std::string& s) {
  auto t = parse_tam(s);
  if (!t) throw UsageError("unknown TAM form '" + s + "'");
  return *t;
}

void require_class(const RulePackage& pkg, const std::string& c) {
  if (!pkg.class_index(c)) throw InvalidCombination("unknown stem class '" + c + "'");
}

std::vector<std::string> split_list(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    for (auto& part : detail::split(v, ',', true)) {
      if (!part.empty()) out.push_back(std::move(part));
    }
  }
  return out;
}

std::size_t width(const std::string& s) { return utf8::decode(s).size(); }

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t n = width(s);
  return n >= w ? s : s + std::string(w - n, ' ');
}

std::string object_label(const std::optional<Png>& o) {
  return o ? std::string(to_string(*o)) : "-";
}

json features_json(const FeatureBundle& b) {
  json j;
  j["tam"] = to_string(b.tam);
  j["class"] = b.stem_class.id;
  j["subject"] = to_string(b.subject);
  j["object"] = b.object ? json(std::string(to_string(*b.object))) : json(nullptr);
  return j;
}

json form_json(const SurfaceForm& f) {
  json j = features_json(f.features);
  j["text"] = f.text;
  json segs = json::array();
  for (const Segment& s : f.segmentation.segments()) {
    segs.push_back({{"slot", to_string(s.kind)},
                    {"morph", s.morph},
                    {"affix", s.affix_id.empty() ? json(nullptr) : json(s.affix_id)}});
  }
  j["segmentation"] = segs;
  json rules = json::array();
  for (const auto& a : f.trace.applied) {
    rules.push_back({{"rule", a.rule_id},
                     {"boundary", a.boundary},
                     {"position", a.position},
                     {"consumed", a.consumed_left + "+" + a.consumed_right},
                     {"replacement", a.replacement}});
  }
  j["rules"] = rules;
  return j;
}

json verb_json(const VerbEntry& e) {
  json j;
  j["verb"] = e.infinitive;
  json rads = json::array();
  for (const auto& r : e.radicals) rads.push_back(r.id());
  j["radicals"] = rads;
  json flags = json::array();
  for (RegularityFlag f : e.flags) flags.push_back(to_string(f));
  j["flags"] = flags;
  j["gloss_am"] = e.gloss_am;
  j["gloss_en"] = e.gloss_en;
  return j;
}

json diagnostics_json(const std::vector<Diagnostic>& ds) {
  json arr = json::array();
  for (const Diagnostic& d : ds) {
    arr.push_back({{"kind", d.kind}, {"cell", d.cell}, {"message", d.message}});
  }
  return arr;
}

void print_trace(const SurfaceForm& f, std::ostream& out) {
  out << "lexical: " << f.trace.input << "\n";
  if (f.trace.applied.empty()) out << "no rules applied\n";
  for (const auto& a : f.trace.applied) {
    out << "rule " << a.rule_id << " at boundary " << a.boundary << ": "
        << a.consumed_left << "+" << a.consumed_right << " -> " << a.replacement << "\n";
  }
  out << "surface: " << f.text << "\n";
}

void render_tsv(const Paradigm& p, std::ostream& out) {
  out << "# tam\tclass\tsubject\tobject\tsurface\tsegmentation\n";
  for (const SurfaceForm& f : p.forms) {
    out << to_string(f.features.tam) << '\t' << f.features.stem_class.id << '\t'
        << to_string(f.features.subject) << '\t' << object_label(f.features.object)
        << '\t' << f.text << '\t' << f.segmentation.lexical() << '\n';
  }
}

void render_json(const Paradigm& p, std::ostream& out) {
  json j = verb_json(p.verb);
  json forms = json::array();
  for (const SurfaceForm& f : p.forms) forms.push_back(form_json(f));
  j["form_count"] = p.forms.size();
  j["forms"] = forms;
  j["diagnostics"] = diagnostics_json(p.diagnostics);
  out << j.dump(2) << "\n";
}

// Subject rows by object columns, one block per (TAM, class).
void render_table(const Paradigm& p, std::ostream& out) {
  out << p.verb.infinitive;
  if (!p.verb.gloss_en.empty()) out << "  " << p.verb.gloss_en;
  out << "  [" << (p.verb.flags.empty() ? "regular" : to_string(p.verb.flags))
      << "]\n";
  std::size_t i = 0;
  while (i < p.forms.size()) {
    const TamForm tam = p.forms[i].features.tam;
    const std::string cls = p.forms[i].features.stem_class.id;
    std::size_t j = i;
    std::vector<std::optional<Png>> columns;
    std::map<std::pair<int, int>, std::string> cells;
    while (j < p.forms.size() && p.forms[j].features.tam == tam &&
           p.forms[j].features.stem_class.id == cls) {
      const auto& f = p.forms[j];
      if (std::find(columns.begin(), columns.end(), f.features.object) == columns.end()) {
        columns.push_back(f.features.object);
      }
      const int col = f.features.object ? static_cast<int>(*f.features.object) : -1;
      cells[{static_cast<int>(f.features.subject), col}] = f.text;
      ++j;
    }
    std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
      return (a ? static_cast<int>(*a) : -1) < (b ? static_cast<int>(*b) : -1);
    });

    std::vector<Png> rows;
    for (Png s : kAllPngs) {
      for (const auto& c : columns) {
        const int col = c ? static_cast<int>(*c) : -1;
        if (cells.contains({static_cast<int>(s), col})) {
          rows.push_back(s);
          break;
        }
      }
    }
    std::size_t label_w = 0;
    for (Png s : rows) {
      label_w = std::max(label_w, width(std::string(pronoun_of(s))) + 4);
    }
    std::vector<std::size_t> col_w;
    for (const auto& c : columns) {
      std::size_t w = object_label(c).size();
      for (Png s : rows) {
        auto it = cells.find({static_cast<int>(s), c ? static_cast<int>(*c) : -1});
        if (it != cells.end()) w = std::max(w, width(it->second));
      }
      col_w.push_back(w);
    }

    out << "\n" << to_string(tam) << " / " << cls << "\n";
    out << pad("", label_w);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << "  " << pad(object_label(columns[c]), col_w[c]);
    }
    out << "\n";
    for (Png s : rows) {
      out << pad(std::string(pronoun_of(s)) + " " + std::string(to_string(s)), label_w);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const int col = columns[c] ? static_cast<int>(*columns[c]) : -1;
        auto it = cells.find({static_cast<int>(s), col});
        out << "  " << pad(it == cells.end() ? "" : it->second, col_w[c]);
      }
      out << "\n";
    }
    i = j;
  }
  for (const Diagnostic& d : p.diagnostics) {
    out << "\nnote: " << d.kind << " " << d.cell << ": " << d.message << "\n";
  }
}

void render_paradigm(const Paradigm& p, const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    render_tsv(p, out);
  } else if (format == "json") {
    render_json(p, out);
  } else {
    render_table(p, out);
  }
}

json report_json(const eval::EvalReport& r) {
  json j;
  j["label"] = r.label;
  j["generated"] = r.generated;
  j["correct"] = r.correct;
  j["wrong"] = r.wrong;
  j["accuracy"] = r.accuracy();
  json cats = json::object();
  for (eval::ErrorCategory c : eval::kAllErrorCategories) {
    auto it = r.per_category.find(c);
    cats[std::string(eval::to_string(c))] = it == r.per_category.end() ? 0 : it->second;
  }
  j["per_category"] = cats;
  json mm = json::array();
  for (const auto& m : r.mismatches) {
    mm.push_back({{"features", features_json(m.features)},
                  {"got", m.got},
                  {"expected", m.expected},
                  {"category", eval::to_string(m.category)}});
  }
  j["mismatches"] = mm;
  return j;
}

std::string percent(double ratio) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << ratio * 100.0 << "%";
  return ss.str();
}

// Subcommand handlers.

int cmd_synthesize(const Options& o, const std::string& verb, const std::string& tam,
                   const std::string& cls, const std::string& subject,
                   const std::string& object, bool trace, std::ostream& out) {
  FeatureBundle b;
  b.tam = require_tam(tam);
  b.subject = require_png(subject, "subject");
  if (!object.empty() && object != "-") b.object = require_png(object, "object");
  const RulePackage pkg = require_package(o);
  const auto lex = require_lexicon(o);
  const VerbEntry& e = require_verb(lex, verb, pkg);
  require_class(pkg, cls);
  b.stem_class = StemClass{cls};
  const SurfaceForm f = synthesize(e, b, pkg);
  if (o.format == "json") {
    json j = form_json(f);
    j["verb"] = e.infinitive;
    out << j.dump(2) << "\n";
  } else if (o.format == "tsv") {
    out << "# tam\tclass\tsubject\tobject\tsurface\tsegmentation\n"
        << to_string(b.tam) << '\t' << cls << '\t' << to_string(b.subject) << '\t'
        << object_label(b.object) << '\t' << f.text << '\t' << f.segmentation.lexical()
        << '\n';
  } else {
    out << f.text << "\n";
  }
  if (trace && o.format != "json") print_trace(f, out);
  return kOk;
}

int cmd_paradigm(const Options& o, const std::string& verb, bool all, unsigned threads,
                 const std::vector<std::string>& tams,
                 const std::vector<std::string>& classes, const std::string& subject,
                 const std::string& object, bool no_object, std::ostream& out,
                 std::ostream& err) {
  ParadigmFilter filter;
  if (!tams.empty()) {
    filter.tams.emplace();
    for (const auto& t : split_list(tams)) filter.tams->push_back(require_tam(t));
  }
  if (!subject.empty()) filter.subject = require_png(subject, "subject");
  if (!object.empty()) filter.object = require_png(object, "object");
  filter.no_object = no_object;
  if (no_object && filter.object) {
    throw UsageError("--object and --no-object are mutually exclusive");
  }
  if (!all && verb.empty()) throw UsageError("a verb (or --all) is required");

  const RulePackage pkg = require_package(o);
  const auto lex = require_lexicon(o);
  if (!classes.empty()) {
    filter.classes.emplace();
    for (const auto& c : split_list(classes)) {
      require_class(pkg, c);
      filter.classes->push_back(c);
    }
  }

  if (all) {
    const BatchResult batch = batch_generate(lex, pkg, threads);
    if (o.format == "json") {
      json j;
      json verbs = json::array();
      for (const Paradigm& p : batch.paradigms) {
        verbs.push_back({{"verb", p.verb.infinitive},
                         {"regular", p.verb.flags.empty()},
                         {"forms", p.forms.size()},
                         {"diagnostics", p.diagnostics.size()}});
      }
      j["verbs"] = verbs;
      j["total_forms"] = batch.total_forms;
      j["total_diagnostics"] = batch.total_diagnostics;
      out << j.dump(2) << "\n";
    } else {
      out << (o.format == "tsv" ? "# verb\tregular\tforms\tdiagnostics\n"
                                : "verb\tregular\tforms\tdiagnostics\n");
      for (const Paradigm& p : batch.paradigms) {
        out << p.verb.infinitive << '\t' << (p.verb.flags.empty() ? "yes" : "no") << '\t'
            << p.forms.size() << '\t' << p.diagnostics.size() << '\n';
      }
      out << (o.format == "tsv" ? "# total\t\t" : "total\t\t") << batch.total_forms
          << '\t' << batch.total_diagnostics << '\n';
    }
    return kOk;
  }

  const VerbEntry& e = require_verb(lex, verb, pkg);
  const Paradigm p = generate_paradigm(e, pkg, filter);
  render_paradigm(p, o.format, out);
  if (o.format != "table") {
    for (const Diagnostic& d : p.diagnostics) {
      err << "note: " << d.kind << " " << d.cell << ": " << d.message << "\n";
    }
  }
  return kOk;
}

int cmd_classify(const Options& o, const std::string& verb, const std::string& radicals,
                 std::ostream& out) {
  VerbEntry e;
  script::RadicalClassTable classes = script::RadicalClassTable::defaults();
  if (!o.rules.empty()) classes = load_rule_package(o.rules).classes;
  if (!radicals.empty()) {
    e.infinitive = verb;
    for (const auto& r : detail::split(radicals, ',', true)) {
      const std::u32string s = utf8::decode(r);
      if (s.size() != 1 || !script::is_supported(s[0])) {
        throw UsageError("bad radical '" + r + "'");
      }
      e.radicals.push_back(script::decompose(s[0]).radical);
    }
  } else {
    const auto lex = require_lexicon(o);
    const VerbEntry* found = find_verb(lex, verb);
    if (found == nullptr) throw UnknownVerb(verb);
    e = *found;
  }
  const FlagSet flags = classify_verb(e, classes);
  if (o.format == "json") {
    json j;
    j["verb"] = e.infinitive;
    j["regular"] = flags.empty();
    json arr = json::array();
    for (RegularityFlag f : flags) arr.push_back(to_string(f));
    j["flags"] = arr;
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (flags.empty()) {
    out << "regular\n";
  } else {
    std::vector<std::string> names;
    for (RegularityFlag f : flags) names.emplace_back(to_string(f));
    out << "irregular: " << detail::join(names, ", ") << "\n";
  }
  return kOk;
}

int cmd_validate(const Options& o, const std::string& dir, std::ostream& out) {
  const std::string path = dir.empty() ? o.rules : dir;
  if (path.empty()) throw UsageError("a rule package directory is required");
  const RulePackage pkg = load_rule_package(path);
  const auto diags = orthography::check_package_rules(pkg.rules, pkg.classes);
  std::size_t errors = 0;
  for (const auto& d : diags) {
    errors += d.severity == orthography::RuleDiagnostic::Severity::error ? 1 : 0;
  }
  if (o.format == "json") {
    json j;
    j["package"] = pkg.name;
    j["version"] = pkg.version;
    j["affixes"] = pkg.affixes.size();
    j["stem_patterns"] = pkg.patterns.size();
    j["rules"] = pkg.rules.size();
    json arr = json::array();
    for (const auto& d : diags) {
      const bool error = d.severity == orthography::RuleDiagnostic::Severity::error;
      arr.push_back({{"severity", error ? "error" : "warning"},
                     {"kind", orthography::to_string(d.kind)},
                     {"rules", d.rule_ids},
                     {"message", d.message}});
    }
    j["diagnostics"] = arr;
    out << j.dump(2) << "\n";
    return errors == 0 ? kOk : kInvalidCombination;
  }
  for (const auto& d : diags) {
    const bool error = d.severity == orthography::RuleDiagnostic::Severity::error;
    out << (error ? "error" : "warning") << '\t' << orthography::to_string(d.kind) << '\t'
        << detail::join(d.rule_ids, ",") << '\t' << d.message << "\n";
  }
  out << "package " << pkg.name << " " << pkg.version << ": " << pkg.affixes.size()
      << " affixes, " << pkg.patterns.size() << " stem patterns, " << pkg.rules.size()
      << " rules; " << errors << " errors, " << diags.size() - errors << " warnings\n";
  return errors == 0 ? kOk : kInvalidCombination;
}

void print_audit(std::ostream& out) {
  out << "published per-verb rows\n";
  out << "#\tverb\tlabel\tgenerated\tcorrect\twrong\tprinted\trecomputed\n";
  std::vector<eval::EvalReport> rows;
  for (const auto& r : eval::published_rows()) {
    const auto rep = eval::counts_report(std::string(r.verb), r.generated, r.correct);
    std::ostringstream printed;
    printed << std::fixed << std::setprecision(1) << r.printed_accuracy << "%";
    out << r.index << '\t' << r.verb << '\t' << (r.regular ? "regular" : "irregular")
        << '\t' << r.generated << '\t' << r.correct << '\t' << r.wrong << '\t'
        << printed.str() << '\t' << percent(rep.accuracy()) << "\n";
    rows.push_back(rep);
  }
  const auto total = eval::aggregate(rows);
  out << "total\t\t\t" << total.generated << '\t' << total.correct << '\t' << total.wrong
      << "\t\t" << percent(total.accuracy()) << "\n\naudit\n";
  for (const auto& f : eval::audit_published()) {
    out << (f.consistent ? "ok          " : "DISCREPANCY ") << f.id << ": " << f.message
        << "\n";
  }
}

json audit_json() {
  json j;
  json rows = json::array();
  for (const auto& r : eval::published_rows()) {
    const auto rep = eval::counts_report(std::string(r.verb), r.generated, r.correct);
    rows.push_back({{"index", r.index},
                    {"verb", r.verb},
                    {"regular", r.regular},
                    {"generated", r.generated},
                    {"correct", r.correct},
                    {"wrong", r.wrong},
                    {"printed_accuracy", r.printed_accuracy},
                    {"recomputed_accuracy", rep.accuracy() * 100.0}});
  }
  j["rows"] = rows;
  json findings = json::array();
  for (const auto& f : eval::audit_published()) {
    findings.push_back({{"id", f.id}, {"consistent", f.consistent}, {"message", f.message}});
  }
  j["findings"] = findings;
  return j;
}

int cmd_eval(const Options& o, const std::string& gold_path, bool audit,
             const std::string& out_path, std::ostream& out) {
  if (gold_path.empty() && !audit) throw UsageError("--gold PATH or --audit is required");
  json doc;
  std::vector<eval::EvalReport> reports;
  if (!gold_path.empty()) {
    const RulePackage pkg = require_package(o);
    const auto lex = require_lexicon(o);
    std::vector<eval::GoldSet> golds;
    if (std::filesystem::is_directory(gold_path)) {
      golds = eval::load_gold_dir(gold_path);
    } else {
      golds.push_back(eval::load_gold(gold_path));
    }
    if (golds.empty()) throw UsageError("no gold files under " + gold_path);
    for (const auto& g : golds) {
      const VerbEntry& e = require_verb(lex, g.verb, pkg);
      reports.push_back(eval::score(generate_paradigm(e, pkg), g, pkg.classes));
    }
    const auto total = eval::aggregate(reports);
    json per = json::array();
    for (const auto& r : reports) per.push_back(report_json(r));
    doc["reports"] = per;
    doc["total"] = report_json(total);
    if (o.format != "json") {
      out << "verb\tcompared\tcorrect\twrong\taccuracy\n";
      for (const auto& r : reports) {
        out << r.label << '\t' << r.generated << '\t' << r.correct << '\t' << r.wrong
            << '\t' << percent(r.accuracy()) << "\n";
      }
      out << "total\t" << total.generated << '\t' << total.correct << '\t' << total.wrong
          << '\t' << percent(total.accuracy()) << "\n";
      for (const auto& [c, n] : total.per_category) {
        out << "  " << eval::to_string(c) << ": " << n << "\n";
      }
      for (const auto& m : total.mismatches) {
        out << "  mismatch " << to_string(m.features) << ": got " << m.got << ", expected "
            << m.expected << " (" << eval::to_string(m.category) << ")\n";
      }
    }
  }
  if (audit) {
    doc["audit"] = audit_json();
    if (o.format != "json") {
      if (!reports.empty()) out << "\n";
      print_audit(out);
    }
  }
  if (o.format == "json") out << doc.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out_path);
    f << doc.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ge'ez verb morphological synthesizer", "geez"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--rules", o.rules, "rule package directory")->envname("GEEZ_RULES");
  app.add_option("--lexicon", o.lexicon, "verb lexicon TSV")->envname("GEEZ_LEXICON");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "tsv", "json"}));

  std::string verb, tam = "perfective", cls = "basic", subject = "3ms", object;
  bool trace = false;
  auto* syn = app.add_subcommand("synthesize", "generate one surface form");
  syn->add_option("verb", verb, "citation form or infinitive")->required();
  syn->add_option("--tam", tam, "TAM form");
  syn->add_option("--class", cls, "stem class");
  syn->add_option("--subject", subject, "subject PNG, e.g. 1cs");
  syn->add_option("--object", object, "object PNG");
  syn->add_flag("--trace", trace, "print rule firings");

  std::string p_verb, p_subject, p_object;
  std::vector<std::string> p_tams, p_classes;
  bool p_no_object = false, p_all = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* par = app.add_subcommand("paradigm", "generate a full or filtered paradigm");
  par->add_option("verb", p_verb, "citation form or infinitive");
  par->add_option("--tam", p_tams, "TAM forms (repeatable or comma list)");
  par->add_option("--class", p_classes, "stem classes (repeatable or comma list)");
  par->add_option("--subject", p_subject, "subject PNG");
  par->add_option("--object", p_object, "object PNG");
  par->add_flag("--no-object", p_no_object, "only forms without an object marker");
  par->add_flag("--all", p_all, "count paradigms for every lexicon verb");
  par->add_option("--threads", threads, "worker threads for --all")
      ->check(CLI::Range(1u, 256u));

  std::string c_verb, c_radicals;
  auto* cla = app.add_subcommand("classify", "print regularity flags");
  cla->add_option("verb", c_verb, "citation form")->required();
  cla->add_option("--radicals", c_radicals, "comma-separated radicals (skips the lexicon)");

  std::string v_dir;
  auto* val = app.add_subcommand("validate", "check a rule package");
  val->add_option("dir", v_dir, "rule package directory (default: --rules)");

  std::string gold, out_path;
  bool audit = false;
  auto* ev = app.add_subcommand("eval", "score paradigms against gold files");
  ev->add_option("--gold", gold, "gold file or directory");
  ev->add_flag("--audit", audit, "recompute the published evaluation totals");
  ev->add_option("--out", out_path, "write the JSON report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (syn->parsed()) return cmd_synthesize(o, verb, tam, cls, subject, object, trace, out);
    if (par->parsed()) {
      return cmd_paradigm(o, p_verb, p_all, threads, p_tams, p_classes, p_subject, p_object,
                          p_no_object, out, err);
    }
    if (cla->parsed()) return cmd_classify(o, c_verb, c_radicals, out);
    if (val->parsed()) return cmd_validate(o, v_dir, out);
    if (ev->parsed()) return cmd_eval(o, gold, audit, out_path, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownVerb& e) {
    err << "error: unknown_verb: " << e.what() << "\n";
    return kUnknownVerb;
  } catch (const InvalidCombination& e) {
    err << "error: invalid_combination: " << e.what() << "\n";
    return kInvalidCombination;
  } catch (const ExcludedCombination& e) {
    err << "error: excluded_combination: " << e.what() << "\n";
    return kInvalidCombination;
  } catch (const NoMatchingAffix& e) {
    err << "error: no_matching_affix: " << e.what() << "\n";
    return kInvalidCombination;
  } catch (const MissingPattern& e) {
    err << "error: missing_pattern: " << e.what() << "\n";
    return kInvalidCombination;
  } catch (const GoldKeyUnmatched& e) {
    err << "error: gold_key_unmatched: " << e.what() << "\n";
    return kInvalidCombination;
  } catch (const script::UnsupportedGrapheme& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const utf8::Utf8Error& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: data_load: " << e.what() << "\n";
    return kDataLoad;
  }
  return kUsage;
}

}  // namespace geez::cli
