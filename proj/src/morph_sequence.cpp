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

#include "geez/morph_sequence.hpp"

#include <stdexcept>

namespace geez {

MorphSequence MorphSequence::make(std::vector<Segment> segments) {
  bool stem_seen = false;
  int last = -1;
  for (const Segment& s : segments) {
    const int rank = static_cast<int>(s.kind);
    if (rank <= last) {
      throw std::invalid_argument("morph slots out of template order at " +
                                  std::string(to_string(s.kind)));
    }
    last = rank;
    if (s.kind == SlotKind::stem) {
      if (s.morph.empty()) throw std::invalid_argument("empty stem morph");
      stem_seen = true;
    }
  }
  if (!stem_seen) throw std::invalid_argument("morph sequence without stem");
  return MorphSequence(std::move(segments));
}

bool MorphSequence::has(SlotKind kind) const { return find(kind) != nullptr; }

const Segment* MorphSequence::find(SlotKind kind) const {
  for (const Segment& s : segments_) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

std::string MorphSequence::lexical() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) out += '+';
    out += segments_[i].morph.empty() ? std::string(kZeroMorph)
                                      : segments_[i].morph;
  }
  return out;
}

std::string MorphSequence::concatenation() const {
  std::string out;
  for (const Segment& s : segments_) out += s.morph;
  return out;
}

}  // namespace geez
