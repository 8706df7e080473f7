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

#include "geez/stem_pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "geez/errors.hpp"
#include "geez/utf8.hpp"
#include "text_util.hpp"

namespace geez {
namespace {

int parse_int(std::string_view s, int lo, int hi, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < lo || v > hi) {
    throw std::invalid_argument(std::string("bad ") + what + " '" +
                                std::string(s) + "'");
  }
  return v;
}

// "R3" -> 3
int parse_radical_ref(std::string_view s) {
  if (s.size() < 2 || s[0] != 'R') {
    throw std::invalid_argument("expected radical reference, got '" +
                                std::string(s) + "'");
  }
  return parse_int(s.substr(1), 1, 9, "radical index");
}

PatternCondition parse_condition(std::string_view tok) {
  PatternCondition c;
  if (tok == "*") return c;
  if (tok == "regular") {
    c.kind = PatternCondition::Kind::regular;
    return c;
  }
  if (auto f = parse_flag(tok)) {
    c.kind = PatternCondition::Kind::flag;
    c.flag = *f;
    return c;
  }
  if (tok.starts_with("n=")) {
    c.kind = PatternCondition::Kind::radical_count;
    c.a = parse_int(tok.substr(2), 1, 9, "radical count");
    return c;
  }
  if (tok.starts_with("verb=")) {
    c.kind = PatternCondition::Kind::verb;
    c.verb = std::string(tok.substr(5));
    if (c.verb.empty() || !script::is_ethiopic_text(c.verb)) {
      throw std::invalid_argument("bad verb condition '" + std::string(tok) + "'");
    }
    return c;
  }
  if (const auto at = tok.find('@'); at != std::string_view::npos) {
    c.kind = PatternCondition::Kind::radical_class;
    c.a = parse_radical_ref(tok.substr(0, at));
    auto cls = script::parse_radical_class(tok.substr(at + 1));
    if (!cls) {
      throw std::invalid_argument("unknown radical class '" +
                                  std::string(tok.substr(at + 1)) + "'");
    }
    c.radical_class = *cls;
    return c;
  }
  if (const auto eq = tok.find('='); eq != std::string_view::npos) {
    c.kind = PatternCondition::Kind::radicals_equal;
    c.a = parse_radical_ref(tok.substr(0, eq));
    c.b = parse_radical_ref(tok.substr(eq + 1));
    return c;
  }
  throw std::invalid_argument("unknown condition '" + std::string(tok) + "'");
}

TemplateToken parse_token(std::string_view tok) {
  TemplateToken t;
  if (tok.front() == '{') {
    if (tok.size() < 3 || tok.back() != '}') {
      throw std::invalid_argument("malformed affix token '" + std::string(tok) + "'");
    }
    t.kind = TemplateToken::Kind::affix;
    t.text = std::string(tok.substr(1, tok.size() - 2));
    return t;
  }
  if (tok.front() == 'R') {
    const auto open = tok.find('(');
    if (open == std::string_view::npos || tok.back() != ')') {
      throw std::invalid_argument("malformed radical token '" + std::string(tok) + "'");
    }
    t.kind = TemplateToken::Kind::radical;
    t.radical = parse_radical_ref(tok.substr(0, open));
    const std::string_view arg = tok.substr(open + 1, tok.size() - open - 2);
    if (arg == "del") {
      t.op = TemplateToken::Op::remove;
    } else if (arg.size() >= 2 && arg[0] == 'o') {
      t.op = TemplateToken::Op::order;
      t.order = parse_int(arg.substr(1), 1, 7, "order");
    } else if (const auto colon = arg.find(':'); colon != std::string_view::npos) {
      t.op = TemplateToken::Op::substitute;
      const std::u32string s = utf8::decode(arg.substr(0, colon));
      if (s.size() != 1 || !script::is_supported(s[0])) {
        throw std::invalid_argument("bad substitute series in '" + std::string(tok) + "'");
      }
      t.series = script::decompose(s[0]).radical.base();
      t.order = parse_int(arg.substr(colon + 1), 1, 7, "order");
    } else {
      throw std::invalid_argument("bad radical operation '" + std::string(tok) + "'");
    }
    return t;
  }
  t.kind = TemplateToken::Kind::literal;
  t.text = std::string(tok);
  if (!script::is_ethiopic_text(t.text)) {
    throw std::invalid_argument("literal is not Ethiopic text '" + t.text + "'");
  }
  return t;
}

}  // namespace

std::string PatternCondition::to_string() const {
  switch (kind) {
    case Kind::any: return "*";
    case Kind::regular: return "regular";
    case Kind::flag: return std::string(geez::to_string(flag));
    case Kind::radical_count: return "n=" + std::to_string(a);
    case Kind::radicals_equal:
      return "R" + std::to_string(a) + "=R" + std::to_string(b);
    case Kind::radical_class:
      return "R" + std::to_string(a) + "@" +
             std::string(script::to_string(radical_class));
    case Kind::verb: return "verb=" + verb;
  }
  return "?";
}

std::string TemplateToken::to_string() const {
  switch (kind) {
    case Kind::affix: return "{" + text + "}";
    case Kind::literal: return text;
    case Kind::radical: {
      std::string out = "R" + std::to_string(radical) + "(";
      switch (op) {
        case Op::order: out += "o" + std::to_string(order); break;
        case Op::remove: out += "del"; break;
        case Op::substitute:
          out += utf8::encode(series) + ":" + std::to_string(order);
          break;
      }
      return out + ")";
    }
  }
  return "?";
}

bool StemPattern::admits(TamForm t, std::string_view stem_class) const {
  if (std::find(tams.begin(), tams.end(), t) == tams.end()) return false;
  return classes.empty() ||
         std::find(classes.begin(), classes.end(), stem_class) != classes.end();
}

std::vector<std::string> StemPattern::affix_refs() const {
  std::vector<std::string> out;
  for (const TemplateToken& t : tokens) {
    if (t.kind == TemplateToken::Kind::affix) out.push_back(t.text);
  }
  return out;
}

StemPattern parse_stem_pattern(std::string_view line) {
  const auto fields = detail::split(line, '|', true);
  if (fields.size() != 4) {
    throw std::invalid_argument("expected 4 '|'-separated fields, got " +
                                std::to_string(fields.size()));
  }
  StemPattern p;
  if (fields[0] == "*") {
    p.tams.assign(kAllTamForms.begin(), kAllTamForms.end());
  } else {
    for (const std::string& t : detail::split(fields[0], ',', true)) {
      auto tam = parse_tam(t);
      if (!tam) throw std::invalid_argument("unknown TAM form '" + t + "'");
      p.tams.push_back(*tam);
    }
  }
  if (fields[1] != "*") {
    for (const std::string& c : detail::split(fields[1], ',', true)) {
      if (c.empty()) throw std::invalid_argument("empty class name");
      p.classes.push_back(c);
    }
  }
  const auto conds = detail::split_ws(fields[2]);
  if (conds.empty()) throw std::invalid_argument("empty condition field");
  for (const std::string& c : conds) {
    PatternCondition pc = parse_condition(c);
    if (pc.kind != PatternCondition::Kind::any) p.conditions.push_back(pc);
  }
  if (fields[3] == "-") {
    p.gap = true;
    return p;
  }
  for (const std::string& tok : detail::split_ws(fields[3])) {
    p.tokens.push_back(parse_token(tok));
  }
  if (p.tokens.empty()) throw std::invalid_argument("empty template");
  return p;
}

std::vector<StemPattern> parse_stem_patterns(std::string_view text,
                                             const std::string& file_name) {
  std::vector<StemPattern> out;
  for (const detail::Line& line : detail::data_lines(text)) {
    try {
      out.push_back(parse_stem_pattern(line.text));
      out.back().line = line.number;
    } catch (const std::exception& e) {
      throw ParseError(file_name, line.number, e.what());
    }
  }
  return out;
}

std::string format_stem_pattern(const StemPattern& p) {
  std::vector<std::string> tams;
  for (TamForm t : p.tams) tams.emplace_back(to_string(t));
  std::vector<std::string> conds;
  for (const PatternCondition& c : p.conditions) conds.push_back(c.to_string());
  std::vector<std::string> toks;
  for (const TemplateToken& t : p.tokens) toks.push_back(t.to_string());
  return detail::join(tams, ",") + " | " +
         (p.classes.empty() ? std::string("*") : detail::join(p.classes, ",")) +
         " | " + (conds.empty() ? std::string("*") : detail::join(conds, " ")) +
         " | " + (p.gap ? std::string("-") : detail::join(toks, " "));
}

}  // namespace geez
