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

#include <iosfwd>
#include <string>
#include <vector>

namespace geez::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnknownVerb = 2,
  kInvalidCombination = 3,
  kDataLoad = 4,
};

/// Runs the command line `args` (program name excluded). Output goes to
/// `out`, one-line error reasons to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geez::cli
