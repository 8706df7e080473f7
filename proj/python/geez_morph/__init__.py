# Copyright 2026 The geez-morph Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rule-based Ge'ez verb synthesizer."""

from ._core import (
    ExcludedCombination,
    GeezError,
    MissingPattern,
    NoMatchingAffix,
    ParseError,
    RulePackage,
    UnknownVerb,
    VerbEntry,
    aggregate_counts,
    audit,
    batch_counts,
    classify,
    compose,
    decompose,
    load_lexicon,
    lookup,
    paradigm,
    published_rows,
    synthesize,
)

__version__ = "1.0.0"

__all__ = [
    "ExcludedCombination",
    "GeezError",
    "MissingPattern",
    "NoMatchingAffix",
    "ParseError",
    "RulePackage",
    "UnknownVerb",
    "VerbEntry",
    "aggregate_counts",
    "audit",
    "batch_counts",
    "classify",
    "compose",
    "decompose",
    "load_lexicon",
    "lookup",
    "paradigm",
    "published_rows",
    "synthesize",
]
