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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace geez {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data file. `line` is 1-based; 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::string reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file_(std::move(file)),
        line_(line),
        reason_(std::move(reason)) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string reason_;
};

class DuplicateEntry : public Error {
 public:
  explicit DuplicateEntry(const std::string& key)
      : Error("duplicate entry: " + key) {}
};

class EmptyLexicon : public Error {
 public:
  explicit EmptyLexicon(const std::string& path)
      : Error("lexicon has no entries: " + path) {}
};

class ManifestMissing : public Error {
 public:
  explicit ManifestMissing(const std::string& dir)
      : Error("rule package manifest not found in " + dir) {}
};

class DanglingReference : public Error {
 public:
  DanglingReference(std::string id, const std::string& where)
      : Error("unresolved reference '" + id + "' in " + where),
        id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class MissingPattern : public Error {
 public:
  MissingPattern(const std::string& tam, const std::string& stem_class,
                 const std::string& flags)
      : Error("no stem pattern for " + tam + "/" + stem_class + " with flags {" +
              flags + "}") {}
};

class NoMatchingAffix : public Error {
 public:
  explicit NoMatchingAffix(const std::string& slot, const std::string& detail)
      : Error("no matching " + slot + " affix for " + detail) {}
};

class ExcludedCombination : public Error {
 public:
  explicit ExcludedCombination(const std::string& detail)
      : Error("excluded subject/object combination " + detail) {}
};

class ConflictingRules : public Error {
 public:
  ConflictingRules(std::size_t position, const std::string& a,
                   const std::string& b)
      : Error("rules " + a + " and " + b +
              " match with equal priority at position " +
              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVerb : public Error {
 public:
  explicit UnknownVerb(const std::string& verb)
      : Error("verb not in lexicon: " + verb) {}
};

class GoldKeyUnmatched : public Error {
 public:
  explicit GoldKeyUnmatched(const std::string& key)
      : Error("gold cell has no counterpart in the paradigm: " + key) {}
};

}  // namespace geez
