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

// Reverse engineering of operation sequences. Given a base value and a gold
// value, Capture finds every short, non-redundant operation sequence that
// turns the base into the gold value.
//
// Values are the vertices of a search graph and operations are its edges.
// The search walks sequences in canonical order, so coarse units are fixed
// before finer ones and every sequence is visited once as a sorted multiset.
// Integer parameters must come from the numbers written in the expression.

#ifndef TIMENORM_CAPTURE_H_
#define TIMENORM_CAPTURE_H_

#include <cstdint>
#include <vector>

#include "timenorm/operation.h"

namespace timenorm {

struct CaptureTask {
  TemporalValue base;
  TemporalValue target;
  // Multiset of integers from the expression's tokens.
  std::vector<int> pool;
};

struct CaptureOptions {
  // Units operations may act on. Empty means every unit except Second.
  std::vector<TimeUnit> units;
  int max_length = 3;
  // Cap on operation applications per task.
  int64_t node_budget = 5'000'000;
};

enum class CaptureStatus { kOk, kNoSequenceFound, kBudgetExceeded };

std::string_view CaptureStatusName(CaptureStatus status);

struct CaptureResult {
  // Canonically sorted sequences, ordered by textual form.
  std::vector<OperationSequence> sequences;
  CaptureStatus status = CaptureStatus::kNoSequenceFound;
  int64_t nodes = 0;
};

CaptureResult Capture(const CaptureTask &task,
                      const CaptureOptions &options = {});

// The operations the instant search may use for a task, in canonical order.
std::vector<Operation> CaptureUniverse(const std::vector<int> &pool,
                                       const CaptureOptions &options);

// True iff the integer parameters of seq form a sub-multiset of pool.
bool RespectsPool(std::span<const Operation> seq, const std::vector<int> &pool);

}  // namespace timenorm

#endif  // TIMENORM_CAPTURE_H_
