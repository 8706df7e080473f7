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

#include "doctest.h"

#include "../support/properties.hpp"
#include "geez/errors.hpp"
#include "geez/orthography.hpp"

using namespace geez;
using namespace geez::orthography;

namespace {

MorphSequence seq(std::vector<std::pair<SlotKind, std::string>> parts) {
  std::vector<Segment> segs;
  for (auto& [k, m] : parts) segs.push_back({k, m, k == SlotKind::stem ? "" : "a"});
  return MorphSequence::make(std::move(segs));
}

std::string surface(const MorphSequence& s) {
  const auto& pkg = testing::seed_package();
  return realize(s, pkg.rules, pkg.classes).surface;
}

}  // namespace

TEST_CASE("parse_rule") {
  const OrthoRule r = parse_rule("100 | @velar:1 stem+sms ኩ | $1:2 | - | - | velar-ku", "x");
  CHECK(r.id == "velar-ku");
  CHECK(r.priority == 100);
  REQUIRE(r.left.size() == 1);
  CHECK(r.left[0].kind == Matcher::Kind::klass);
  CHECK(r.left[0].order == 1);
  CHECK(r.boundary.left == SlotKind::stem);
  CHECK(r.boundary.right == SlotKind::sms);
  REQUIRE(r.surface.size() == 1);
  CHECK(r.surface[0].kind == OutputToken::Kind::reorder);
  CHECK(parse_rule(format_rule(r), "y") == r);

  CHECK(parse_rule("1 | ለ + ኩ | ል ኩ | - | -", "dflt").id == "dflt");
  CHECK_THROWS_AS(parse_rule("1 | ለ ኩ | ል | - | -", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule("1 | ለ + ኩ | $3 | - | -", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule("1 | ለ + ኩ | ል", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule("x | ለ + ኩ | ል | - | -", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule("1 | ለ + ኩ | $1:9 | - | -", "x"), std::invalid_argument);
}

TEST_CASE("parse_rules reports the failing line") {
  try {
    parse_rules("# c\n1 | ለ + ኩ | ል ኩ | - | - | a\n\n1 | broken\n", "r.txt");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_rules("1 | ለ + ኩ | ል ኩ | - | - | a\n2 | ለ + ኩ | ል ኩ | - | - | a\n", "r"),
                  DuplicateEntry);
}

TEST_CASE("seed realizations") {
  CHECK(surface(seq({{SlotKind::stem, "ቀተለ"}, {SlotKind::sms, "ኩ"}})) == "ቀተልኩ");
  CHECK(surface(seq({{SlotKind::stem, "ቀተለ"}, {SlotKind::sms, "ክሙ"}, {SlotKind::oms, "ኒ"}})) ==
        "ቀተልክሙኒ");
  CHECK(surface(seq({{SlotKind::stem, "ሰበከ"}, {SlotKind::sms, "ኩ"}})) == "ሰበኩ");
  CHECK(surface(seq({{SlotKind::stem, "ከረመ"}, {SlotKind::sms, "ነ"}})) == "ከረምነ");
  CHECK(surface(seq({{SlotKind::stem, "አመነ"}, {SlotKind::sms, "ነ"}})) == "አመነ");
  // Nothing matches across a stem/oms boundary after a zero subject here.
  CHECK(surface(seq({{SlotKind::stem, "ቀተለ"}, {SlotKind::sms, ""}, {SlotKind::oms, "ኒ"}})) ==
        "ቀተለኒ");
}

TEST_CASE("trace records each rewrite") {
  const auto& pkg = testing::seed_package();
  const auto r = realize(seq({{SlotKind::stem, "ሰበከ"}, {SlotKind::sms, "ኩ"}}), pkg.rules,
                         pkg.classes);
  CHECK(r.trace.input == "ሰበከ+ኩ");
  REQUIRE(r.trace.applied.size() == 1);
  CHECK(r.trace.applied[0].rule_id == "velar-ku");
  CHECK(r.trace.applied[0].boundary == 1);
  CHECK(r.trace.applied[0].consumed_left == "ከ");
  CHECK(r.trace.applied[0].consumed_right == "ኩ");
  CHECK(r.trace.applied[0].replacement == "ኩ");
  CHECK(replay(r.trace) == "ሰበኩ");
}

TEST_CASE("equal top priority is a conflict") {
  const std::vector<OrthoRule> rules = {
      parse_rule("5 | ለ + ኩ | ል ኩ | - | - | a", "a"),
      parse_rule("5 | @any + ኩ | $1:6 $2 | - | - | b", "b"),
  };
  const auto s = seq({{SlotKind::stem, "ቀተለ"}, {SlotKind::sms, "ኩ"}});
  CHECK_THROWS_AS(realize(s, rules), ConflictingRules);
  auto higher = rules;
  higher[0].priority = 6;
  CHECK(realize(s, higher).trace.applied.at(0).rule_id == "a");
}

TEST_CASE("contexts and the nearest non-empty left slot") {
  const std::vector<OrthoRule> rules = {
      parse_rule("5 | ን sms+oms ኒ | ና $2 | ክ | - | kn", "kn"),
  };
  CHECK(realize(seq({{SlotKind::stem, "ቀተል"}, {SlotKind::sms, "ክን"}, {SlotKind::oms, "ኒ"}}),
                rules)
            .surface == "ቀተልክናኒ");
  // Without the left context the rule stays silent.
  CHECK(realize(seq({{SlotKind::stem, "ቀተል"}, {SlotKind::sms, "ን"}, {SlotKind::oms, "ኒ"}}),
                rules)
            .surface == "ቀተልንኒ");
  // A zero sms leaves the stem as the left neighbour of the oms.
  const std::vector<OrthoRule> stem_side = {parse_rule("5 | @any:1 stem+oms ኒ | $1 $2 | - | -", "s")};
  CHECK(realize(seq({{SlotKind::stem, "ቀተለ"}, {SlotKind::sms, ""}, {SlotKind::oms, "ኒ"}}),
                stem_side)
            .trace.applied.size() == 1);
}

TEST_CASE("labiovelars are never reordered") {
  const std::vector<OrthoRule> rules = {parse_rule("5 | @any stem+sms ኩ | $1:6 $2 | - | -", "r")};
  CHECK(realize(seq({{SlotKind::stem, "ቀኰ"}, {SlotKind::sms, "ኩ"}}), rules).surface == "ቀኰኩ");
}

TEST_CASE("check_package_rules") {
  const auto& pkg = testing::seed_package();
  CHECK(check_package_rules({}).empty());
  for (const auto& d : check_package_rules(pkg.rules, pkg.classes)) {
    FAIL_CHECK(to_string(d.kind) << ": " << d.message);
  }

  const std::vector<OrthoRule> clash = {
      parse_rule("5 | ለ + ኩ | ል ኩ | - | - | a", "a"),
      parse_rule("5 | ለ + ኩ | ሎ ኩ | - | - | b", "b"),
  };
  auto ds = check_package_rules(clash);
  REQUIRE_FALSE(ds.empty());
  CHECK(ds[0].kind == RuleDiagnostic::Kind::conflict);
  CHECK(ds[0].severity == RuleDiagnostic::Severity::error);

  const std::vector<OrthoRule> shadowed = {
      parse_rule("9 | @any + ኩ | $1:6 $2 | - | - | wide", "wide"),
      parse_rule("5 | ለ + ኩ | ል ኩ | - | - | narrow", "narrow"),
  };
  ds = check_package_rules(shadowed);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == RuleDiagnostic::Kind::unreachable);
  CHECK(ds[0].severity == RuleDiagnostic::Severity::warning);

  const std::vector<OrthoRule> unknown = {parse_rule("5 | @liquid + ኩ | $1 $2 | - | - | u", "u")};
  ds = check_package_rules(unknown);
  REQUIRE_FALSE(ds.empty());
  CHECK(ds[0].kind == RuleDiagnostic::Kind::unknown_class);
}

TEST_CASE("orthography properties on 10k random sequences") {
  const auto& pkg = testing::seed_package();
  auto seqs = testing::random_sequences(pkg, 10000, 7);
  auto raw = testing::random_raw_sequences(2000, 8);
  seqs.insert(seqs.end(), raw.begin(), raw.end());
  for (const auto& r : {testing::orthography_identity(seqs),
                        testing::orthography_determinism(seqs, pkg, 9),
                        testing::orthography_trace_soundness(seqs, pkg)}) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.ok());
    CHECK(r.cases >= 10000);
  }
}
