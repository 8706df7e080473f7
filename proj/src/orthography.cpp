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

#include "geez/orthography.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "geez/errors.hpp"
#include "geez/utf8.hpp"
#include "text_util.hpp"

namespace geez::orthography {
namespace {

using script::RadicalClassTable;

int parse_order_spec(std::string_view spec) {
  if (spec == "*") return 0;
  int value = 0;
  const auto* end = spec.data() + spec.size();
  auto [ptr, ec] = std::from_chars(spec.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1 || value > 7) {
    throw std::invalid_argument("bad order '" + std::string(spec) + "'");
  }
  return value;
}

char32_t checked_grapheme(char32_t ch) {
  if (!script::is_supported(ch)) {
    throw std::invalid_argument("unsupported grapheme '" + utf8::encode(ch) +
                                "'");
  }
  return ch;
}

void append_matchers(std::string_view tok, std::vector<Matcher>& out) {
  if (tok.empty()) throw std::invalid_argument("empty matcher");
  if (tok.front() == '@') {
    Matcher m;
    m.kind = Matcher::Kind::klass;
    const auto colon = tok.find(':');
    m.class_name = std::string(tok.substr(1, colon == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : colon - 1));
    if (m.class_name.empty()) throw std::invalid_argument("empty class name");
    if (colon != std::string_view::npos) {
      m.order = parse_order_spec(tok.substr(colon + 1));
    }
    out.push_back(std::move(m));
    return;
  }
  if (tok.front() == '[') {
    if (tok.size() < 3 || tok.back() != ']') {
      throw std::invalid_argument("malformed set '" + std::string(tok) + "'");
    }
    Matcher m;
    m.kind = Matcher::Kind::set;
    for (char32_t ch : utf8::decode(tok.substr(1, tok.size() - 2))) {
      m.set.push_back(checked_grapheme(ch));
    }
    out.push_back(std::move(m));
    return;
  }
  const auto colon = tok.find(':');
  const std::u32string lit = utf8::decode(tok.substr(0, colon));
  if (lit.empty()) throw std::invalid_argument("empty literal");
  if (colon != std::string_view::npos) {
    if (lit.size() != 1) {
      throw std::invalid_argument("order suffix needs a single fidel");
    }
    Matcher m;
    m.kind = Matcher::Kind::series;
    m.grapheme = script::decompose(checked_grapheme(lit[0])).radical.base();
    m.order = parse_order_spec(tok.substr(colon + 1));
    out.push_back(std::move(m));
    return;
  }
  for (char32_t ch : lit) {
    Matcher m;
    m.kind = Matcher::Kind::grapheme;
    m.grapheme = checked_grapheme(ch);
    out.push_back(std::move(m));
  }
}

std::vector<Matcher> parse_matchers(std::string_view field) {
  std::vector<Matcher> out;
  if (detail::trim(field) == "-") return out;
  for (const std::string& tok : detail::split_ws(field)) {
    append_matchers(tok, out);
  }
  return out;
}

std::optional<SlotKind> parse_kind_or_empty(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto k = parse_slot(s);
  if (!k) throw std::invalid_argument("unknown slot kind '" + std::string(s) + "'");
  return k;
}

std::string format_matchers(const std::vector<Matcher>& ms) {
  if (ms.empty()) return "-";
  std::vector<std::string> parts;
  for (const Matcher& m : ms) parts.push_back(m.to_string());
  return detail::join(parts, " ");
}

bool rule_matches(const OrthoRule& rule, const std::u32string& acc,
                  std::optional<SlotKind> left_kind, SlotKind right_kind,
                  const std::u32string& right, const std::u32string& rest,
                  const RadicalClassTable& classes) {
  if (!rule.boundary.admits(left_kind, right_kind)) return false;
  const std::size_t nl = rule.left.size();
  const std::size_t nlc = rule.left_ctx.size();
  if (acc.size() < nl + nlc) return false;
  const std::size_t base = acc.size() - nl;
  for (std::size_t k = 0; k < nl; ++k) {
    if (!rule.left[k].matches(acc[base + k], classes)) return false;
  }
  for (std::size_t k = 0; k < nlc; ++k) {
    if (!rule.left_ctx[k].matches(acc[base - nlc + k], classes)) return false;
  }
  const std::size_t nr = rule.right.size();
  if (right.size() < nr) return false;
  for (std::size_t k = 0; k < nr; ++k) {
    if (!rule.right[k].matches(right[k], classes)) return false;
  }
  const std::size_t nrc = rule.right_ctx.size();
  if (rest.size() < nr + nrc) return false;
  for (std::size_t k = 0; k < nrc; ++k) {
    if (!rule.right_ctx[k].matches(rest[nr + k], classes)) return false;
  }
  // A rule cannot move a labiovelar off its only order.
  for (const OutputToken& t : rule.surface) {
    if (t.kind != OutputToken::Kind::reorder) continue;
    const std::size_t ref = static_cast<std::size_t>(t.ref - 1);
    const char32_t ch = ref < nl ? acc[base + ref] : right[ref - nl];
    if (script::is_supported(ch) && script::decompose(ch).radical.opaque() &&
        t.order != 1) {
      return false;
    }
  }
  return true;
}

std::u32string build_output(const OrthoRule& rule, const std::u32string& matched) {
  std::u32string out;
  for (const OutputToken& t : rule.surface) {
    switch (t.kind) {
      case OutputToken::Kind::copy:
        out.push_back(matched.at(static_cast<std::size_t>(t.ref - 1)));
        break;
      case OutputToken::Kind::reorder:
        out.push_back(script::reorder(
            matched.at(static_cast<std::size_t>(t.ref - 1)), t.order));
        break;
      case OutputToken::Kind::literal:
        out.push_back(t.literal);
        break;
    }
  }
  return out;
}

}  // namespace

bool Matcher::matches(char32_t ch, const RadicalClassTable& classes) const {
  switch (kind) {
    case Kind::grapheme:
      return ch == grapheme;
    case Kind::set:
      return set.find(ch) != std::u32string::npos;
    case Kind::series:
    case Kind::klass: {
      if (!script::is_supported(ch)) return false;
      const script::Fidel f = script::decompose(ch);
      if (order != 0 && f.order.index() != order) return false;
      if (kind == Kind::series) return f.radical.base() == grapheme;
      if (class_name == "any") return true;
      const auto cls = script::parse_radical_class(class_name);
      return cls && classes.classify(f.radical) == *cls;
    }
  }
  return false;
}

std::string Matcher::to_string() const {
  switch (kind) {
    case Kind::grapheme:
      return utf8::encode(grapheme);
    case Kind::set:
      return "[" + utf8::encode(set) + "]";
    case Kind::series:
      return utf8::encode(grapheme) + ":" +
             (order == 0 ? std::string("*") : std::to_string(order));
    case Kind::klass:
      return "@" + class_name + (order == 0 ? "" : ":" + std::to_string(order));
  }
  return {};
}

bool BoundarySpec::admits(std::optional<SlotKind> l, SlotKind r) const {
  if (right && *right != r) return false;
  if (left && (!l || *l != *left)) return false;
  return true;
}

std::string BoundarySpec::to_string() const {
  std::string out;
  if (left) out += geez::to_string(*left);
  out += '+';
  if (right) out += geez::to_string(*right);
  return out;
}

std::vector<std::string> OrthoRule::unknown_classes() const {
  std::vector<std::string> out;
  for (const auto* side : {&left, &right, &left_ctx, &right_ctx}) {
    for (const Matcher& m : *side) {
      if (m.kind == Matcher::Kind::klass && m.class_name != "any" &&
          !script::parse_radical_class(m.class_name)) {
        out.push_back(m.class_name);
      }
    }
  }
  return out;
}

OrthoRule parse_rule(std::string_view line, std::string default_id) {
  const auto fields = detail::split(line, '|', true);
  if (fields.size() != 5 && fields.size() != 6) {
    throw std::invalid_argument("expected 5 or 6 '|'-separated fields, got " +
                                std::to_string(fields.size()));
  }
  OrthoRule rule;
  rule.id = fields.size() == 6 && !fields[5].empty() ? fields[5]
                                                     : std::move(default_id);
  {
    const std::string& p = fields[0];
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), rule.priority);
    if (ec != std::errc() || ptr != p.data() + p.size()) {
      throw std::invalid_argument("bad priority '" + p + "'");
    }
  }

  bool seen_boundary = false;
  for (const std::string& tok : detail::split_ws(fields[1])) {
    const auto plus = tok.find('+');
    if (plus != std::string::npos) {
      if (seen_boundary) throw std::invalid_argument("more than one boundary");
      seen_boundary = true;
      rule.boundary.left = parse_kind_or_empty(std::string_view(tok).substr(0, plus));
      rule.boundary.right = parse_kind_or_empty(std::string_view(tok).substr(plus + 1));
      continue;
    }
    append_matchers(tok, seen_boundary ? rule.right : rule.left);
  }
  if (!seen_boundary) throw std::invalid_argument("lexical side has no boundary '+'");
  if (rule.left.empty() && rule.right.empty()) {
    throw std::invalid_argument("lexical side matches nothing");
  }

  const int matched = static_cast<int>(rule.left.size() + rule.right.size());
  if (fields[2] != "0") {
    for (const std::string& tok : detail::split_ws(fields[2])) {
      if (tok.front() == '$') {
        OutputToken t;
        const auto colon = tok.find(':');
        const std::string ref = tok.substr(1, colon == std::string::npos
                                                  ? std::string::npos
                                                  : colon - 1);
        auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), t.ref);
        if (ec != std::errc() || ptr != ref.data() + ref.size() || t.ref < 1 ||
            t.ref > matched) {
          throw std::invalid_argument("bad reference '" + tok + "'");
        }
        if (colon == std::string::npos) {
          t.kind = OutputToken::Kind::copy;
        } else {
          t.kind = OutputToken::Kind::reorder;
          t.order = parse_order_spec(std::string_view(tok).substr(colon + 1));
          if (t.order == 0) throw std::invalid_argument("reorder needs an order");
        }
        rule.surface.push_back(t);
        continue;
      }
      for (char32_t ch : utf8::decode(tok)) {
        OutputToken t;
        t.kind = OutputToken::Kind::literal;
        t.literal = checked_grapheme(ch);
        rule.surface.push_back(t);
      }
    }
  }
  rule.left_ctx = parse_matchers(fields[3]);
  rule.right_ctx = parse_matchers(fields[4]);
  return rule;
}

std::vector<OrthoRule> parse_rules(std::string_view text,
                                   const std::string& file_name) {
  std::vector<OrthoRule> out;
  for (const detail::Line& line : detail::data_lines(text)) {
    try {
      out.push_back(parse_rule(line.text, "L" + std::to_string(line.number)));
    } catch (const std::exception& e) {
      throw ParseError(file_name, line.number, e.what());
    }
  }
  std::set<std::string> ids;
  for (const OrthoRule& r : out) {
    if (!ids.insert(r.id).second) throw DuplicateEntry("rule id " + r.id);
  }
  return out;
}

std::string format_rule(const OrthoRule& rule) {
  std::vector<std::string> lexical;
  for (const Matcher& m : rule.left) lexical.push_back(m.to_string());
  lexical.push_back(rule.boundary.to_string());
  for (const Matcher& m : rule.right) lexical.push_back(m.to_string());

  std::vector<std::string> surface;
  for (const OutputToken& t : rule.surface) {
    switch (t.kind) {
      case OutputToken::Kind::copy:
        surface.push_back("$" + std::to_string(t.ref));
        break;
      case OutputToken::Kind::reorder:
        surface.push_back("$" + std::to_string(t.ref) + ":" +
                          std::to_string(t.order));
        break;
      case OutputToken::Kind::literal:
        surface.push_back(utf8::encode(t.literal));
        break;
    }
  }
  return std::to_string(rule.priority) + " | " + detail::join(lexical, " ") +
         " | " + (surface.empty() ? "0" : detail::join(surface, " ")) + " | " +
         format_matchers(rule.left_ctx) + " | " +
         format_matchers(rule.right_ctx) + " | " + rule.id;
}

Realization realize(const MorphSequence& seq, std::span<const OrthoRule> rules,
                    const RadicalClassTable& classes) {
  const auto& segs = seq.segments();
  std::vector<std::u32string> morphs;
  morphs.reserve(segs.size());
  for (const Segment& s : segs) morphs.push_back(utf8::decode(s.morph));

  Realization result;
  result.trace.input = seq.lexical();
  std::u32string acc = morphs.empty() ? std::u32string() : morphs[0];
  std::optional<SlotKind> left_kind;
  if (!segs.empty() && !morphs[0].empty()) left_kind = segs[0].kind;

  for (std::size_t i = 1; i < segs.size(); ++i) {
    const std::u32string& right = morphs[i];
    std::u32string rest = right;
    for (std::size_t j = i + 1; j < morphs.size(); ++j) rest += morphs[j];

    const OrthoRule* best = nullptr;
    const OrthoRule* tie = nullptr;
    for (const OrthoRule& rule : rules) {
      if (best != nullptr && rule.priority < best->priority) continue;
      if (!rule_matches(rule, acc, left_kind, segs[i].kind, right, rest,
                        classes)) {
        continue;
      }
      if (best == nullptr || rule.priority > best->priority) {
        best = &rule;
        tie = nullptr;
      } else {
        tie = &rule;
      }
    }
    if (tie != nullptr) throw ConflictingRules(acc.size(), best->id, tie->id);

    if (best != nullptr) {
      const std::size_t nl = best->left.size();
      const std::size_t nr = best->right.size();
      const std::u32string consumed_left = acc.substr(acc.size() - nl);
      const std::u32string consumed_right = right.substr(0, nr);
      const std::u32string replacement =
          build_output(*best, consumed_left + consumed_right);
      result.trace.applied.push_back(
          {best->id, i, acc.size() - nl, utf8::encode(consumed_left),
           utf8::encode(consumed_right), utf8::encode(replacement)});
      acc.resize(acc.size() - nl);
      acc += replacement;
      acc += right.substr(nr);
    } else {
      acc += right;
    }
    if (!right.empty()) left_kind = segs[i].kind;
  }
  result.surface = utf8::encode(acc);
  result.trace.output = result.surface;
  return result;
}

std::string replay(const RuleTrace& trace) {
  std::vector<std::u32string> morphs;
  for (const std::string& part : detail::split(trace.input, '+', false)) {
    morphs.push_back(part == kZeroMorph ? std::u32string() : utf8::decode(part));
  }
  std::map<std::size_t, const AppliedRule*> by_boundary;
  for (const AppliedRule& a : trace.applied) {
    if (!by_boundary.emplace(a.boundary, &a).second) {
      throw std::runtime_error("two rewrites recorded at one boundary");
    }
  }
  std::u32string acc = morphs.empty() ? std::u32string() : morphs[0];
  for (std::size_t i = 1; i < morphs.size(); ++i) {
    const std::u32string& right = morphs[i];
    auto it = by_boundary.find(i);
    if (it == by_boundary.end()) {
      acc += right;
      continue;
    }
    const AppliedRule& a = *it->second;
    const std::u32string cl = utf8::decode(a.consumed_left);
    const std::u32string cr = utf8::decode(a.consumed_right);
    if (acc.size() < cl.size() || acc.compare(acc.size() - cl.size(), cl.size(), cl) != 0 ||
        right.compare(0, cr.size(), cr) != 0 || a.position != acc.size() - cl.size()) {
      throw std::runtime_error("recorded rewrite of " + a.rule_id +
                               " does not fit boundary " + std::to_string(i));
    }
    acc.resize(acc.size() - cl.size());
    acc += utf8::decode(a.replacement);
    acc += right.substr(cr.size());
  }
  by_boundary.erase(by_boundary.begin(), by_boundary.lower_bound(1));
  if (!by_boundary.empty() && by_boundary.rbegin()->first >= morphs.size()) {
    throw std::runtime_error("rewrite recorded past the last boundary");
  }
  return utf8::encode(acc);
}

std::string_view to_string(RuleDiagnostic::Kind k) {
  switch (k) {
    case RuleDiagnostic::Kind::conflict: return "conflict";
    case RuleDiagnostic::Kind::unreachable: return "unreachable";
    case RuleDiagnostic::Kind::unknown_class: return "unknown_class";
    case RuleDiagnostic::Kind::duplicate_priority: return "duplicate_priority";
  }
  return "?";
}

namespace {

struct Probe {
  std::u32string acc;
  std::optional<SlotKind> left_kind;
  SlotKind right_kind;
  std::u32string right;
};

constexpr std::size_t kMaxProbes = 4096;

std::vector<char32_t> candidates(const Matcher& m, const RadicalClassTable& classes) {
  std::vector<char32_t> out;
  for (char32_t ch : script::supported_scalars()) {
    if (m.matches(ch, classes)) out.push_back(ch);
  }
  return out;
}

// Probe inputs built from the rule's own pattern: every grapheme that each
// matcher accepts, combined exhaustively or, past kMaxProbes, by a seeded
// sample.
std::vector<Probe> probes_for(const OrthoRule& rule, std::size_t seed,
                              const RadicalClassTable& classes) {
  std::vector<std::vector<char32_t>> dims;
  for (const auto* side : {&rule.left_ctx, &rule.left, &rule.right, &rule.right_ctx}) {
    for (const Matcher& m : *side) {
      dims.push_back(candidates(m, classes));
      if (dims.back().empty()) return {};
    }
  }
  std::vector<std::optional<SlotKind>> lefts;
  if (rule.boundary.left) {
    lefts.push_back(rule.boundary.left);
  } else {
    for (SlotKind k : kAllSlotKinds) {
      if (k != SlotKind::oms) lefts.emplace_back(k);
    }
  }
  std::vector<SlotKind> rights;
  if (rule.boundary.right) {
    rights.push_back(*rule.boundary.right);
  } else {
    for (SlotKind k : kAllSlotKinds) {
      if (k != SlotKind::prefix) rights.push_back(k);
    }
  }

  const std::size_t nleft = rule.left_ctx.size() + rule.left.size();
  auto make = [&](const std::vector<std::size_t>& pick, std::size_t li,
                  std::size_t ri) {
    Probe p;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      (d < nleft ? p.acc : p.right).push_back(dims[d][pick[d]]);
    }
    p.left_kind = lefts[li];
    p.right_kind = rights[ri];
    return p;
  };

  double total = static_cast<double>(lefts.size() * rights.size());
  for (const auto& d : dims) total *= static_cast<double>(d.size());

  std::vector<Probe> out;
  std::vector<std::size_t> pick(dims.size(), 0);
  if (total <= static_cast<double>(kMaxProbes)) {
    while (true) {
      for (std::size_t li = 0; li < lefts.size(); ++li) {
        for (std::size_t ri = 0; ri < rights.size(); ++ri) {
          out.push_back(make(pick, li, ri));
        }
      }
      std::size_t d = 0;
      while (d < dims.size() && ++pick[d] == dims[d].size()) pick[d++] = 0;
      if (d == dims.size()) break;
    }
    return out;
  }
  std::mt19937_64 rng(0x6765657a + seed);
  for (std::size_t n = 0; n < kMaxProbes; ++n) {
    for (std::size_t d = 0; d < dims.size(); ++d) {
      pick[d] = std::uniform_int_distribution<std::size_t>(0, dims[d].size() - 1)(rng);
    }
    const auto li = std::uniform_int_distribution<std::size_t>(0, lefts.size() - 1)(rng);
    const auto ri = std::uniform_int_distribution<std::size_t>(0, rights.size() - 1)(rng);
    out.push_back(make(pick, li, ri));
  }
  return out;
}

}  // namespace

std::vector<RuleDiagnostic> check_package_rules(std::span<const OrthoRule> rules,
                                                const RadicalClassTable& classes) {
  std::vector<RuleDiagnostic> out;
  using Kind = RuleDiagnostic::Kind;
  using Severity = RuleDiagnostic::Severity;

  for (const OrthoRule& r : rules) {
    for (const std::string& name : r.unknown_classes()) {
      out.push_back({Kind::unknown_class, Severity::error, {r.id},
                     "rule " + r.id + " references unknown class @" + name});
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> overlapping;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const OrthoRule& r = rules[i];
    const std::vector<Probe> probes = probes_for(r, i, classes);
    bool shadowed_everywhere = true;
    for (const Probe& p : probes) {
      bool shadowed = false;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (j == i) continue;
        const OrthoRule& q = rules[j];
        if (q.priority < r.priority) continue;
        if (!rule_matches(q, p.acc, p.left_kind, p.right_kind, p.right, p.right,
                          classes)) {
          continue;
        }
        if (q.priority == r.priority) {
          overlapping.emplace(std::min(i, j), std::max(i, j));
        } else {
          shadowed = true;
        }
      }
      if (!shadowed) shadowed_everywhere = false;
    }
    if (probes.empty()) {
      out.push_back({Kind::unreachable, Severity::warning, {r.id},
                     "rule " + r.id + " matches no supported input"});
    } else if (shadowed_everywhere) {
      out.push_back({Kind::unreachable, Severity::warning, {r.id},
                     "rule " + r.id +
                         " is shadowed by a higher-priority rule on every probe"});
    }
  }

  for (const auto& [i, j] : overlapping) {
    out.push_back({Kind::conflict, Severity::error, {rules[i].id, rules[j].id},
                   "rules " + rules[i].id + " and " + rules[j].id +
                       " share priority " + std::to_string(rules[i].priority) +
                       " and match a common input"});
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i].priority == rules[j].priority && !overlapping.contains({i, j})) {
        out.push_back({Kind::duplicate_priority, Severity::warning,
                       {rules[i].id, rules[j].id},
                       "rules " + rules[i].id + " and " + rules[j].id +
                           " share priority " + std::to_string(rules[i].priority)});
      }
    }
  }
  return out;
}

}  // namespace geez::orthography
