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

// Ethiopic grapheme layer. A fidel is a consonant series (radical) plus a
// vowel order 1-7. Series occupy eight-codepoint rows of the Ethiopic block;
// offsets 0-6 are the seven orders, offset 7 is the labialized column, which
// is not supported. The four labiovelar series (ቈ ኈ ኰ ጐ) are accepted as
// opaque radicals: each glyph is its own radical with the single order 1.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geez::script {

class UnsupportedGrapheme : public std::runtime_error {
 public:
  explicit UnsupportedGrapheme(char32_t ch);
  char32_t scalar() const { return scalar_; }

 private:
  char32_t scalar_;
};

class InvalidOrder : public std::invalid_argument {
 public:
  explicit InvalidOrder(int order);
  int order() const { return order_; }

 private:
  int order_;
};

class Radical {
 public:
  /// `base` is the first-order scalar of the series (or the glyph itself for
  /// opaque radicals). Throws UnsupportedGrapheme for anything else.
  explicit Radical(char32_t base);

  char32_t base() const { return base_; }
  bool opaque() const;
  /// The first-order fidel as UTF-8, e.g. "ለ".
  std::string id() const;

  friend auto operator<=>(const Radical&, const Radical&) = default;

 private:
  char32_t base_;
};

class Order {
 public:
  explicit Order(int index);
  int index() const { return index_; }
  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  int index_;
};

struct Fidel {
  Radical radical;
  Order order;
  friend bool operator==(const Fidel&, const Fidel&) = default;
};

enum class RadicalClass { guttural, semivowel, velar, plain };

std::string_view to_string(RadicalClass c);
std::optional<RadicalClass> parse_radical_class(std::string_view name);

bool is_supported(char32_t ch);
Fidel decompose(char32_t ch);
char32_t compose(const Fidel& f);
Fidel reorder(const Fidel& f, Order target);
/// Convenience: reorder a scalar value directly.
char32_t reorder(char32_t ch, int target);

/// Every supported radical, in code-chart order.
std::span<const Radical> supported_radicals();
/// Every supported scalar value, ascending.
std::span<const char32_t> supported_scalars();

/// Radical-to-class assignment. The default table holds the guttural,
/// semivowel and velar sets; every other radical is plain.
class RadicalClassTable {
 public:
  static const RadicalClassTable& defaults();

  RadicalClass classify(const Radical& r) const;
  /// Replaces the members of `c`. Radicals previously in `c` become plain.
  void assign(RadicalClass c, const std::vector<Radical>& members);
  std::vector<Radical> members(RadicalClass c) const;

  friend bool operator==(const RadicalClassTable&,
                         const RadicalClassTable&) = default;

 private:
  std::map<char32_t, RadicalClass> special_;
};

RadicalClass classify_radical(const Radical& r);

/// Decodes UTF-8 and decomposes every grapheme; throws UnsupportedGrapheme or
/// utf8::Utf8Error.
std::vector<Fidel> decompose_text(std::string_view text);
bool is_ethiopic_text(std::string_view text);

}  // namespace geez::script
