// Copyright 2026 The timenorm Authors.
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

// Applies a rule store to an expression. A rule whose pattern matches the
// whole expression wins outright. Otherwise the expression is covered with
// as few rule matches as possible, skipping stop words, and the operations
// of the chosen rules are merged into one sequence.

#ifndef TIMENORM_NORMALIZER_H_
#define TIMENORM_NORMALIZER_H_

#include <string>
#include <vector>

#include "timenorm/rule.h"

namespace timenorm {

enum class Via { kDirect, kSegmented, kFailed };

std::string_view ViaName(Via via);

// One rule matched over tokens [begin, end).
struct Segment {
  int rule = 0;  // index into the store
  int begin = 0;
  int end = 0;
  Bindings bindings;
};

struct NormalizationResult {
  Via via = Via::kFailed;
  std::string timex_type;  // DATE, TIME, DURATION or SET
  std::string value;
  std::vector<Segment> segments;
  // True when some matching rule or cover was found but none executed.
  bool exec_failed = false;
};

// TIMEX3 type of a value.
std::string TimexType(const TemporalValue &value);

// Best cover of tokens using only rules for which `use` is true. Empty when
// no cover exists. Covers are compared by size, then by their support
// values sorted in descending order (larger first), then by segment starts
// (earlier first).
std::vector<Segment> SegmentTokens(const std::vector<Token> &tokens,
                                   const RuleStore &store,
                                   const Lexicon &lexicon,
                                   const std::vector<bool> &use);

// Union of the resolved operations of the segments in canonical order, with
// duplicates removed. Throws Error(kKindConflict) when the rules disagree
// on the value kind, Error(kUnresolvedVariable) on a bad binding.
OperationSequence MergeSegments(const std::vector<Segment> &segments,
                                const RuleStore &store);

NormalizationResult Normalize(const std::vector<Token> &tokens,
                              const Instant &dct, const RuleStore &store,
                              const Lexicon &lexicon = Lexicon::Default());

}  // namespace timenorm

#endif  // TIMENORM_NORMALIZER_H_
