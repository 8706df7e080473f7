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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "geez/errors.hpp"
#include "geez/eval.hpp"
#include "geez/lexicon.hpp"
#include "geez/orthography.hpp"
#include "geez/script.hpp"
#include "geez/stemgen.hpp"
#include "geez/synthesizer.hpp"
#include "geez/utf8.hpp"

namespace py = pybind11;
using namespace geez;

namespace {

TamForm tam_arg(const std::string& s) {
  auto t = parse_tam(s);
  if (!t) throw py::value_error("unknown TAM form '" + s + "'");
  return *t;
}

Png png_arg(const std::string& s) {
  auto p = parse_png(s);
  if (!p) throw py::value_error("unknown person-number-gender '" + s + "'");
  return *p;
}

char32_t one_scalar(const std::string& s) {
  const auto u = utf8::decode(s);
  if (u.size() != 1) throw py::value_error("expected a single fidel, got '" + s + "'");
  return u[0];
}

py::dict form_dict(const SurfaceForm& f) {
  py::dict d;
  d["tam"] = std::string(to_string(f.features.tam));
  d["class"] = f.features.stem_class.id;
  d["subject"] = std::string(to_string(f.features.subject));
  d["object"] = f.features.object ? py::object(py::str(std::string(to_string(*f.features.object))))
                                  : py::object(py::none());
  d["text"] = f.text;
  d["lexical"] = f.segmentation.lexical();
  py::list rules;
  for (const auto& a : f.trace.applied) rules.append(a.rule_id);
  d["rules"] = rules;
  return d;
}

std::vector<std::string> flag_names(const FlagSet& flags) {
  std::vector<std::string> out;
  for (RegularityFlag f : flags) out.emplace_back(to_string(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rule-based Ge'ez verb synthesizer";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const script::UnsupportedGrapheme& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const utf8::Utf8Error& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });
  // Later registrations are tried first, so subclasses follow the base.
  auto base = py::register_exception<Error>(m, "GeezError");
  py::register_exception<UnknownVerb>(m, "UnknownVerb", base);
  py::register_exception<ExcludedCombination>(m, "ExcludedCombination", base);
  py::register_exception<MissingPattern>(m, "MissingPattern", base);
  py::register_exception<NoMatchingAffix>(m, "NoMatchingAffix", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<VerbEntry>(m, "VerbEntry")
      .def_readonly("infinitive", &VerbEntry::infinitive)
      .def_readonly("gloss_am", &VerbEntry::gloss_am)
      .def_readonly("gloss_en", &VerbEntry::gloss_en)
      .def_property_readonly("radicals",
                             [](const VerbEntry& e) {
                               std::vector<std::string> out;
                               for (const auto& r : e.radicals) out.push_back(r.id());
                               return out;
                             })
      .def_property_readonly("flags", [](const VerbEntry& e) { return flag_names(e.flags); })
      .def_property_readonly("regular", [](const VerbEntry& e) { return e.flags.empty(); })
      .def("__repr__", [](const VerbEntry& e) { return "<VerbEntry " + e.infinitive + ">"; });

  py::class_<RulePackage>(m, "RulePackage")
      .def_static("load", &load_rule_package, py::arg("path"))
      .def_readonly("name", &RulePackage::name)
      .def_readonly("version", &RulePackage::version)
      .def_property_readonly("stem_classes",
                             [](const RulePackage& p) {
                               std::vector<std::string> out;
                               for (const auto& c : p.stem_classes) out.push_back(c.id);
                               return out;
                             })
      .def_property_readonly("rule_count", [](const RulePackage& p) { return p.rules.size(); })
      .def("check_rules", [](const RulePackage& p) {
        py::list out;
        for (const auto& d : orthography::check_package_rules(p.rules, p.classes)) {
          py::dict item;
          item["kind"] = std::string(orthography::to_string(d.kind));
          item["error"] = d.severity == orthography::RuleDiagnostic::Severity::error;
          item["rules"] = d.rule_ids;
          item["message"] = d.message;
          out.append(item);
        }
        return out;
      });

  m.def("load_lexicon", &load_lexicon, py::arg("path"));
  m.def(
      "lookup",
      [](const std::vector<VerbEntry>& lex, const std::string& form, const RulePackage& pkg) {
        const VerbEntry* e = lookup_verb(lex, form, pkg);
        if (e == nullptr) throw UnknownVerb(form);
        return *e;
      },
      py::arg("lexicon"), py::arg("form"), py::arg("package"));

  m.def(
      "classify",
      [](const std::vector<std::string>& radicals) {
        VerbEntry e;
        for (const auto& r : radicals) e.radicals.emplace_back(one_scalar(r));
        return flag_names(classify_verb(e));
      },
      py::arg("radicals"), "Regularity flags for a root; empty for a regular verb.");

  m.def(
      "synthesize",
      [](const VerbEntry& e, const RulePackage& pkg, const std::string& tam,
         const std::string& stem_class, const std::string& subject,
         const std::optional<std::string>& object) {
        FeatureBundle b{tam_arg(tam), StemClass{stem_class}, png_arg(subject), std::nullopt};
        if (object) b.object = png_arg(*object);
        return form_dict(synthesize(e, b, pkg));
      },
      py::arg("entry"), py::arg("package"), py::arg("tam") = "perfective",
      py::arg("stem_class") = "basic", py::arg("subject") = "3ms",
      py::arg("object") = py::none());

  m.def(
      "paradigm",
      [](const VerbEntry& e, const RulePackage& pkg,
         const std::optional<std::vector<std::string>>& tams,
         const std::optional<std::vector<std::string>>& classes,
         const std::optional<std::string>& subject, const std::optional<std::string>& object,
         bool no_object) {
        ParadigmFilter f;
        if (tams) {
          f.tams.emplace();
          for (const auto& t : *tams) f.tams->push_back(tam_arg(t));
        }
        f.classes = classes;
        if (subject) f.subject = png_arg(*subject);
        if (object) f.object = png_arg(*object);
        f.no_object = no_object;
        Paradigm p;
        {
          py::gil_scoped_release release;
          p = generate_paradigm(e, pkg, f);
        }
        py::list forms;
        for (const auto& s : p.forms) forms.append(form_dict(s));
        return forms;
      },
      py::arg("entry"), py::arg("package"), py::arg("tams") = py::none(),
      py::arg("classes") = py::none(), py::arg("subject") = py::none(),
      py::arg("object") = py::none(), py::arg("no_object") = false);

  m.def(
      "batch_counts",
      [](const std::vector<VerbEntry>& entries, const RulePackage& pkg, unsigned threads) {
        BatchResult b;
        {
          py::gil_scoped_release release;
          b = batch_generate(entries, pkg, threads);
        }
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& p : b.paradigms) out.emplace_back(p.verb.infinitive, p.forms.size());
        return out;
      },
      py::arg("entries"), py::arg("package"), py::arg("threads") = 4);

  m.def(
      "decompose",
      [](const std::string& ch) {
        const auto f = script::decompose(one_scalar(ch));
        return std::make_pair(f.radical.id(), f.order.index());
      },
      py::arg("fidel"));
  m.def(
      "compose",
      [](const std::string& radical, int order) {
        const script::Radical r(one_scalar(radical));
        return utf8::encode(script::compose({r, script::Order(order)}));
      },
      py::arg("radical"), py::arg("order"));

  m.def(
      "aggregate_counts",
      [](const std::vector<std::pair<std::size_t, std::size_t>>& rows) {
        std::vector<eval::EvalReport> reports;
        for (const auto& [g, c] : rows) reports.push_back(eval::counts_report("", g, c));
        const auto total = eval::aggregate(reports);
        py::dict d;
        d["generated"] = total.generated;
        d["correct"] = total.correct;
        d["wrong"] = total.wrong;
        d["accuracy"] = total.accuracy();
        return d;
      },
      py::arg("rows"), "Totals over (generated, correct) pairs.");

  m.def("published_rows", [] {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& r : eval::published_rows()) out.emplace_back(r.generated, r.correct);
    return out;
  });

  m.def("audit", [] {
    py::list out;
    for (const auto& f : eval::audit_published()) {
      py::dict d;
      d["id"] = f.id;
      d["consistent"] = f.consistent;
      d["message"] = f.message;
      out.append(d);
    }
    return out;
  });
}
