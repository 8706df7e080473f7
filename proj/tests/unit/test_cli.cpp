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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/properties.hpp"
#include "geez/cli.hpp"
#include "json.hpp"

using namespace geez;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, bool with_data = true) {
  if (with_data) {
    args.insert(args.begin(), {"--rules", testing::seed_rules_dir().string(), "--lexicon",
                               testing::seed_lexicon_path().string()});
  }
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s, bool skip_comments) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (!(skip_comments && line.starts_with("#"))) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("synthesize") {
  auto r = run({"synthesize", "ቀተለ", "--tam", "perfective", "--subject", "1cs"});
  CHECK(r.code == 0);
  CHECK(r.out == "ቀተልኩ\n");
  r = run({"synthesize", "ቀቲል", "--subject", "2mp", "--object", "1cs"});
  CHECK(r.out == "ቀተልክሙኒ\n");
  r = run({"synthesize", "ሰበከ", "--subject", "1cs", "--trace"});
  CHECK(r.out.find("rule velar-ku") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = run({"synthesize", "ቀተለ", "--subject", "1cs", "--object", "1cs"});
  CHECK(r.code == cli::kInvalidCombination);
  CHECK(r.err.starts_with("error: "));
  CHECK(count_lines(r.err, false) == 1);

  r = run({"synthesize", "ዱመይ"});
  CHECK(r.code == cli::kUnknownVerb);
  CHECK(r.err.starts_with("error: unknown_verb"));

  CHECK(run({"synthesize", "ቀተለ", "--class", "intensive"}).code == cli::kInvalidCombination);
  CHECK(run({"synthesize", "ቀተለ", "--tam", "infinitive", "--subject", "1cs"}).code ==
        cli::kInvalidCombination);
  CHECK(run({"synthesize", "ቀተለ", "--subject", "4xs"}).code == cli::kUsage);
  CHECK(run({"--format", "bogus", "paradigm", "ቀተለ"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);

  r = run({"--rules", "/nonexistent", "--lexicon", testing::seed_lexicon_path().string(),
           "synthesize", "ቀተለ"},
          false);
  CHECK(r.code == cli::kDataLoad);
  CHECK(r.err.starts_with("error: data_load"));
  r = run({"--rules", testing::seed_rules_dir().string(), "--lexicon", "/nonexistent.tsv",
           "synthesize", "ቀተለ"},
          false);
  CHECK(r.code == cli::kDataLoad);
}

TEST_CASE("paradigm formats") {
  auto r = run({"--format", "tsv", "paradigm", "ቀተለ", "--tam", "perfective", "--class",
                "basic", "--no-object"});
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out, true) == 10);
  CHECK(r.out.starts_with("# tam\tclass\tsubject\tobject\tsurface"));

  const auto again = run({"--format", "tsv", "paradigm", "ቀተለ", "--tam", "perfective",
                          "--class", "basic", "--no-object"});
  CHECK(again.out == r.out);

  r = run({"--format", "json", "paradigm", "ፈቀደ"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verb"] == "ፈቀደ");
  CHECK(j["form_count"] == j["forms"].size());
  const auto& first = j["forms"][0];
  CHECK(first["tam"] == "perfective");
  CHECK(first["class"] == "basic");
  CHECK(first["subject"] == "3ms");
  CHECK(first["object"].is_null());
  CHECK(first["text"] == "ፈቀደ");
  CHECK(first["segmentation"].is_array());
  CHECK(run({"--format", "json", "paradigm", "ፈቀደ"}).out == r.out);

  r = run({"paradigm", "ቀተለ", "--tam", "perfective", "--class", "basic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ውእቱ 3ms") < r.out.find("ንሕነ 1cp"));

  r = run({"paradigm", "--all", "--threads", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = run({"classify", "ሐደገ"});
  CHECK(r.out == "irregular: guttural_initial, velar_final\n");
  CHECK(run({"classify", "ፈቀደ"}).out == "regular\n");
  r = run({"classify", "x", "--radicals", "ወ,ቀ,ሰ"}, false);
  CHECK(r.out == "irregular: semivowel_any\n");
  CHECK(run({"classify", "ዱመይ"}).code == cli::kUnknownVerb);
}

TEST_CASE("validate") {
  auto r = run({"validate", testing::seed_rules_dir().string()}, false);
  CHECK(r.code == 0);
  CHECK(r.out.find("0 errors") != std::string::npos);
  CHECK(run({"validate", "/nonexistent"}, false).code == cli::kDataLoad);

  r = run({"--format", "json", "validate", testing::seed_rules_dir().string()}, false);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["package"] == "seed");
  CHECK(j["diagnostics"].empty());
}

TEST_CASE("eval") {
  const auto out_path = std::filesystem::temp_directory_path() / "geez_eval_test.json";
  auto r = run({"eval", "--gold", testing::gold_dir().string(), "--audit", "--out",
                out_path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("100.00%") != std::string::npos);
  CHECK(r.out.find("DISCREPANCY error_count") != std::string::npos);
  const auto j = nlohmann::json::parse(std::ifstream(out_path));
  CHECK(j["total"]["correct"] == j["total"]["generated"]);
  CHECK(j["audit"]["rows"].size() == 30);
  std::filesystem::remove(out_path);
  CHECK(run({"eval"}).code == cli::kUsage);
}
