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
#include "geez/script.hpp"
#include "geez/utf8.hpp"

using namespace geez;
using namespace geez::script;

namespace {
char32_t cp(const char* s) { return utf8::decode(s).at(0); }
}  // namespace

TEST_CASE("decompose reads series and order from the block layout") {
  const Fidel le = decompose(cp("ለ"));
  CHECK(le.radical.id() == "ለ");
  CHECK(le.order.index() == 1);
  const Fidel l = decompose(cp("ል"));
  CHECK(l.radical == le.radical);
  CHECK(l.order.index() == 6);
  CHECK_THROWS_AS(decompose(U'a'), UnsupportedGrapheme);
  // Eighth column (labialized) is rejected.
  CHECK_THROWS_AS(decompose(cp("ሏ")), UnsupportedGrapheme);
}

TEST_CASE("compose and order bounds") {
  const Radical qe(cp("ቀ"));
  CHECK(compose({qe, Order(1)}) == cp("ቀ"));
  CHECK(compose({qe, Order(6)}) == cp("ቅ"));
  CHECK_THROWS_AS(Order(0), InvalidOrder);
  CHECK_THROWS_AS(Order(8), InvalidOrder);
  CHECK_THROWS_AS(Radical(cp("ቅ")), UnsupportedGrapheme);
}

TEST_CASE("reorder") {
  CHECK(reorder(cp("ለ"), 6) == cp("ል"));
  CHECK(reorder(cp("ል"), 6) == cp("ል"));
  CHECK(reorder(cp("ገ"), 6) == cp("ግ"));
  CHECK(reorder(cp("ሐ"), 4) == cp("ሓ"));
  // Labiovelars only have order 1.
  CHECK(decompose(cp("ኰ")).radical.opaque());
  CHECK(reorder(cp("ኰ"), 1) == cp("ኰ"));
  CHECK_THROWS_AS(reorder(cp("ኰ"), 6), InvalidOrder);
}

TEST_CASE("radical classes") {
  CHECK(classify_radical(Radical(cp("ሐ"))) == RadicalClass::guttural);
  CHECK(classify_radical(Radical(cp("ኀ"))) == RadicalClass::guttural);
  CHECK(classify_radical(Radical(cp("ወ"))) == RadicalClass::semivowel);
  CHECK(classify_radical(Radical(cp("የ"))) == RadicalClass::semivowel);
  CHECK(classify_radical(Radical(cp("ቀ"))) == RadicalClass::velar);
  CHECK(classify_radical(Radical(cp("በ"))) == RadicalClass::plain);
  CHECK(RadicalClassTable::defaults().members(RadicalClass::guttural).size() == 5);

  RadicalClassTable t = RadicalClassTable::defaults();
  t.assign(RadicalClass::velar, {Radical(cp("ከ"))});
  CHECK(t.classify(Radical(cp("ቀ"))) == RadicalClass::plain);
  CHECK(t.classify(Radical(cp("ከ"))) == RadicalClass::velar);
  CHECK_FALSE(t == RadicalClassTable::defaults());
}

TEST_CASE("text helpers") {
  CHECK(is_ethiopic_text("ቀተልኩ"));
  CHECK_FALSE(is_ethiopic_text("ቀተል ኩ"));
  CHECK_FALSE(is_ethiopic_text(""));
  const auto fs = decompose_text("ቀተልኩ");
  REQUIRE(fs.size() == 4);
  CHECK(fs[2].order.index() == 6);
  CHECK(fs[3].order.index() == 2);
  CHECK_THROWS_AS(decompose_text("\xff"), utf8::Utf8Error);
}

TEST_CASE("utf8 rejects malformed input") {
  CHECK_THROWS_AS(utf8::decode("\xe1\x88"), utf8::Utf8Error);
  CHECK_THROWS_AS(utf8::decode("\xc0\xaf"), utf8::Utf8Error);
  CHECK(utf8::encode(utf8::decode("ሀ a")) == "ሀ a");
}

TEST_CASE("round-trip over the whole supported block") {
  const auto r = testing::script_round_trip();
  INFO(r.first_failure);
  CHECK(r.ok());
  CHECK(supported_scalars().size() == 37 * 7 + 20);
  CHECK(supported_radicals().size() == 37 + 20);
}
