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

#include "geez/script.hpp"

#include <algorithm>
#include <sstream>

#include "geez/utf8.hpp"

namespace geez::script {
namespace {

constexpr char32_t kBlockFirst = 0x1200;
constexpr char32_t kBlockLast = 0x137C;

// First-order scalars of the seven-order series in the Ethiopic block.
constexpr std::array<char32_t, 37> kSeriesBases = {
    0x1200, 0x1208, 0x1210, 0x1218, 0x1220, 0x1228, 0x1230, 0x1238,
    0x1240, 0x1250, 0x1260, 0x1268, 0x1270, 0x1278, 0x1280, 0x1290,
    0x1298, 0x12A0, 0x12A8, 0x12B8, 0x12C8, 0x12D0, 0x12D8, 0x12E0,
    0x12E8, 0x12F0, 0x12F8, 0x1300, 0x1308, 0x1318, 0x1320, 0x1328,
    0x1330, 0x1338, 0x1340, 0x1348, 0x1350};

constexpr std::size_t kSeriesCount = kSeriesBases.size();

// Labiovelar glyphs of ቈ ኈ ኰ ጐ.
constexpr std::array<char32_t, 20> kOpaque = {
    0x1248, 0x124A, 0x124B, 0x124C, 0x124D, 0x1288, 0x128A,
    0x128B, 0x128C, 0x128D, 0x12B0, 0x12B2, 0x12B3, 0x12B4,
    0x12B5, 0x1310, 0x1312, 0x1313, 0x1314, 0x1315};

struct Cell {
  char32_t base = 0;
  int order = 0;  // 0: unsupported
};

struct Tables {
  std::array<Cell, kBlockLast - kBlockFirst + 1> cells{};
  std::vector<char32_t> scalars;

  Tables() {
    for (std::size_t s = 0; s < kSeriesCount; ++s) {
      const char32_t base = kSeriesBases[s];
      for (int o = 1; o <= 7; ++o) {
        cells[base + static_cast<char32_t>(o - 1) - kBlockFirst] = {base, o};
      }
    }
    for (char32_t g : kOpaque) cells[g - kBlockFirst] = {g, 1};
    for (char32_t cp = kBlockFirst; cp <= kBlockLast; ++cp) {
      const Cell& c = cells[cp - kBlockFirst];
      if (c.order == 0) continue;
      scalars.push_back(cp);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

const Cell* cell_of(char32_t ch) {
  if (ch < kBlockFirst || ch > kBlockLast) return nullptr;
  const Cell& c = tables().cells[ch - kBlockFirst];
  return c.order == 0 ? nullptr : &c;
}

bool is_opaque(char32_t base) {
  return std::find(kOpaque.begin(), kOpaque.end(), base) != kOpaque.end();
}

std::string hex(char32_t ch) {
  std::ostringstream os;
  os << "U+" << std::uppercase << std::hex << static_cast<unsigned>(ch);
  return os.str();
}

}  // namespace

UnsupportedGrapheme::UnsupportedGrapheme(char32_t ch)
    : std::runtime_error("unsupported grapheme " + hex(ch)), scalar_(ch) {}

InvalidOrder::InvalidOrder(int order)
    : std::invalid_argument("invalid order " + std::to_string(order)),
      order_(order) {}

Radical::Radical(char32_t base) : base_(base) {
  const Cell* c = cell_of(base);
  if (c == nullptr || c->base != base) throw UnsupportedGrapheme(base);
}

bool Radical::opaque() const { return is_opaque(base_); }

std::string Radical::id() const { return utf8::encode(base_); }

Order::Order(int index) : index_(index) {
  if (index < 1 || index > 7) throw InvalidOrder(index);
}

std::string_view to_string(RadicalClass c) {
  switch (c) {
    case RadicalClass::guttural: return "guttural";
    case RadicalClass::semivowel: return "semivowel";
    case RadicalClass::velar: return "velar";
    case RadicalClass::plain: return "plain";
  }
  return "plain";
}

std::optional<RadicalClass> parse_radical_class(std::string_view name) {
  for (auto c : {RadicalClass::guttural, RadicalClass::semivowel,
                 RadicalClass::velar, RadicalClass::plain}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

bool is_supported(char32_t ch) { return cell_of(ch) != nullptr; }

Fidel decompose(char32_t ch) {
  const Cell* c = cell_of(ch);
  if (c == nullptr) throw UnsupportedGrapheme(ch);
  return Fidel{Radical(c->base), Order(c->order)};
}

char32_t compose(const Fidel& f) {
  if (f.radical.opaque()) {
    if (f.order.index() != 1) throw InvalidOrder(f.order.index());
    return f.radical.base();
  }
  return f.radical.base() + static_cast<char32_t>(f.order.index() - 1);
}

Fidel reorder(const Fidel& f, Order target) {
  Fidel out{f.radical, target};
  compose(out);  // validates opaque radicals
  return out;
}

char32_t reorder(char32_t ch, int target) {
  return compose(reorder(decompose(ch), Order(target)));
}

std::span<const Radical> supported_radicals() {
  static const std::vector<Radical> radicals = [] {
    std::vector<Radical> out;
    for (std::size_t s = 0; s < kSeriesCount; ++s) {
      out.emplace_back(kSeriesBases[s]);
    }
    for (char32_t g : kOpaque) out.emplace_back(g);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return radicals;
}

std::span<const char32_t> supported_scalars() { return tables().scalars; }

const RadicalClassTable& RadicalClassTable::defaults() {
  static const RadicalClassTable table = [] {
    RadicalClassTable t;
    t.assign(RadicalClass::guttural,
             {Radical(U'ሀ'), Radical(U'ሐ'), Radical(U'ኀ'), Radical(U'አ'),
              Radical(U'ዐ')});
    t.assign(RadicalClass::semivowel, {Radical(U'የ'), Radical(U'ወ')});
    t.assign(RadicalClass::velar, {Radical(U'ቀ'), Radical(U'ከ'), Radical(U'ገ')});
    return t;
  }();
  return table;
}

RadicalClass RadicalClassTable::classify(const Radical& r) const {
  auto it = special_.find(r.base());
  return it == special_.end() ? RadicalClass::plain : it->second;
}

void RadicalClassTable::assign(RadicalClass c,
                               const std::vector<Radical>& members) {
  std::erase_if(special_, [c](const auto& kv) { return kv.second == c; });
  if (c == RadicalClass::plain) {
    for (const Radical& r : members) special_.erase(r.base());
    return;
  }
  for (const Radical& r : members) special_[r.base()] = c;
}

std::vector<Radical> RadicalClassTable::members(RadicalClass c) const {
  std::vector<Radical> out;
  if (c == RadicalClass::plain) {
    for (const Radical& r : supported_radicals()) {
      if (!special_.contains(r.base())) out.push_back(r);
    }
    return out;
  }
  for (const auto& [base, cls] : special_) {
    if (cls == c) out.emplace_back(base);
  }
  return out;
}

RadicalClass classify_radical(const Radical& r) {
  return RadicalClassTable::defaults().classify(r);
}

std::vector<Fidel> decompose_text(std::string_view text) {
  std::vector<Fidel> out;
  for (char32_t ch : utf8::decode(text)) out.push_back(decompose(ch));
  return out;
}

bool is_ethiopic_text(std::string_view text) {
  try {
    const std::u32string cps = utf8::decode(text);
    return !cps.empty() &&
           std::all_of(cps.begin(), cps.end(), [](char32_t c) {
             return is_supported(c);
           });
  } catch (const utf8::Utf8Error&) {
    return false;
  }
}

}  // namespace geez::script
