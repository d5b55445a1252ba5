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

#include "timenorm/capture.h"

#include <algorithm>
#include <map>
#include <set>

namespace timenorm {

namespace {

constexpr TimeField kBoundaryFields[] = {
    TimeField::kMonthOfQuarter, TimeField::kMonthOfYear,
    TimeField::kQuarterOfYear,  TimeField::kWeekOfYear,
    TimeField::kDayOfMonth,     TimeField::kDayOfWeek,
    TimeField::kHourOfDay};

bool Shiftable(TimeUnit u) {
  return u != TimeUnit::kDayTime && u != TimeUnit::kSecond;
}

std::vector<TimeUnit> EffectiveUnits(const CaptureOptions &options) {
  if (!options.units.empty()) return options.units;
  std::vector<TimeUnit> units;
  for (int i = 0; i < kNumTimeUnits; ++i) {
    if (static_cast<TimeUnit>(i) != TimeUnit::kSecond) {
      units.push_back(static_cast<TimeUnit>(i));
    }
  }
  return units;
}

std::map<int, int> Counts(const std::vector<int> &values) {
  std::map<int, int> counts;
  for (int v : values) ++counts[v];
  return counts;
}

// Depth-first walk over sorted multisets of universe operations.
class Search {
 public:
  Search(const CaptureTask &task, const Instant &target,
         const CaptureOptions &options)
      : target_(target),
        options_(options),
        universe_(CaptureUniverse(task.pool, options)),
        pool_(Counts(task.pool)) {}

  void Run(const TemporalValue &base) {
    if (base == TemporalValue(target_)) found_.push_back({});
    Visit(0, base);
  }

  bool exhausted() const { return exhausted_; }
  int64_t nodes() const { return nodes_; }
  std::vector<OperationSequence> &found() { return found_; }

 private:
  void Visit(size_t first, const TemporalValue &value) {
    if (static_cast<int>(path_.size()) >= options_.max_length) return;
    for (size_t i = first; i < universe_.size(); ++i) {
      if (nodes_ >= options_.node_budget) {
        exhausted_ = true;
        return;
      }
      const Operation &op = universe_[i];
      std::vector<int> nums = op.NumericParams();
      if (!Take(nums)) continue;
      ++nodes_;
      TemporalValue next = value;
      if (ApplyOperation(op, &next) == ErrorCode::kOk) {
        path_.push_back(op);
        if (next.is_instant() && next.instant() == target_ &&
            next.instant().IsValid()) {
          found_.push_back(path_);
        }
        Visit(i, next);
        path_.pop_back();
      }
      Give(nums);
    }
  }

  bool Take(const std::vector<int> &nums) {
    for (size_t k = 0; k < nums.size(); ++k) {
      if (pool_[nums[k]] == 0) {
        for (size_t r = 0; r < k; ++r) ++pool_[nums[r]];
        return false;
      }
      --pool_[nums[k]];
    }
    return true;
  }

  void Give(const std::vector<int> &nums) {
    for (int v : nums) ++pool_[v];
  }

  Instant target_;
  const CaptureOptions &options_;
  std::vector<Operation> universe_;
  std::map<int, int> pool_;
  OperationSequence path_;
  std::vector<OperationSequence> found_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Keeps sound, non-redundant, deduplicated sequences.
void Finish(const TemporalValue &base, const TemporalValue &target,
            std::vector<OperationSequence> candidates, CaptureResult *result) {
  std::set<std::string> seen;
  for (OperationSequence &seq : candidates) {
    TemporalValue out;
    if (TryExecute(seq, base, &out) != ErrorCode::kOk || !(out == target)) {
      continue;
    }
    if (IsRedundant(seq, base)) continue;
    if (seen.insert(ToString(seq)).second) {
      result->sequences.push_back(std::move(seq));
    }
  }
  std::sort(result->sequences.begin(), result->sequences.end(),
            [](const OperationSequence &a, const OperationSequence &b) {
              return ToString(a) < ToString(b);
            });
  if (result->status != CaptureStatus::kBudgetExceeded) {
    result->status = result->sequences.empty() ? CaptureStatus::kNoSequenceFound
                                               : CaptureStatus::kOk;
  }
}

void CaptureInstant(const CaptureTask &task, const Instant &target,
                    const CaptureOptions &options, CaptureResult *result) {
  Search search(task, target, options);
  search.Run(task.base);
  result->nodes += search.nodes();
  if (search.exhausted()) result->status = CaptureStatus::kBudgetExceeded;
  Finish(task.base, TemporalValue(target), std::move(search.found()), result);
}

// Recurring values: capture the concrete prefix, then mark the generic
// units with MakeSet.
void CaptureSet(const CaptureTask &task, const Instant &target,
                const CaptureOptions &options, CaptureResult *result) {
  Instant prefix;
  std::vector<TimeUnit> generic;
  for (int i = 0; i < target.size(); ++i) {
    if (target[i].generic) {
      generic.push_back(UnitOf(target[i].field));
    } else if (generic.empty()) {
      prefix.Push(target[i].field, target[i].value);
    }
  }
  // MakeSet keeps the coarser fields, so it may also apply to the base
  // directly.
  std::vector<OperationSequence> prefixes = {{}};
  if (!prefix.empty()) {
    CaptureResult sub;
    CaptureInstant({task.base, TemporalValue(prefix), task.pool}, prefix,
                   options, &sub);
    result->nodes += sub.nodes;
    if (sub.status == CaptureStatus::kBudgetExceeded) {
      result->status = CaptureStatus::kBudgetExceeded;
    }
    prefixes.insert(prefixes.end(), sub.sequences.begin(),
                    sub.sequences.end());
  }
  std::vector<std::vector<Operation>> markers = {
      {Operation::MakeSet(generic.back())}};
  std::vector<Operation> all;
  for (TimeUnit u : generic) all.push_back(Operation::MakeSet(u));
  if (all.size() > 1) markers.push_back(all);

  std::vector<OperationSequence> candidates;
  for (const OperationSequence &p : prefixes) {
    for (const std::vector<Operation> &m : markers) {
      OperationSequence seq = p;
      seq.insert(seq.end(), m.begin(), m.end());
      candidates.push_back(SortSequence(std::move(seq)));
    }
  }
  Finish(task.base, TemporalValue(target), std::move(candidates), result);
}

}  // namespace

std::string_view CaptureStatusName(CaptureStatus status) {
  switch (status) {
    case CaptureStatus::kOk: return "ok";
    case CaptureStatus::kNoSequenceFound: return "no_sequence_found";
    case CaptureStatus::kBudgetExceeded: return "search_budget_exceeded";
  }
  return "";
}

std::vector<Operation> CaptureUniverse(const std::vector<int> &pool,
                                       const CaptureOptions &options) {
  std::set<int> values(pool.begin(), pool.end());
  std::vector<Operation> ops;
  for (TimeUnit u : EffectiveUnits(options)) {
    for (EnumKind kind : {EnumKind::kMonth, EnumKind::kWeekday,
                          EnumKind::kSeason, EnumKind::kDayTime}) {
      if (UnitOf(kind) != u) continue;
      int n = kind == EnumKind::kMonth     ? 12
              : kind == EnumKind::kWeekday ? 7
              : kind == EnumKind::kSeason  ? 4
                                           : 6;
      for (int i = 1; i <= n; ++i) ops.push_back(Operation::ModifyEnum({kind, i}));
    }
    for (int f = 0; f <= static_cast<int>(TimeField::kMinuteOfHour); ++f) {
      TimeField field = static_cast<TimeField>(f);
      const FieldSpec &spec = Spec(field);
      if (spec.unit != u) continue;
      for (int v : values) {
        if (v >= spec.lo && v <= spec.hi) {
          ops.push_back(Operation::ModifyVal(v, field));
        }
      }
    }
    if (u == TimeUnit::kDay) {
      // A month holds at most 5 of any weekday, a year at most 53.
      for (int v : values) {
        for (TimeUnit scope : {TimeUnit::kMonth, TimeUnit::kYear}) {
          if (v < 1 || v > (scope == TimeUnit::kMonth ? 5 : 53)) continue;
          for (int d = 1; d <= 7; ++d) {
            ops.push_back(
                Operation::CountEnum(v, {EnumKind::kWeekday, d}, scope));
          }
        }
      }
    }
    ops.push_back(Operation::Equal(u));
    for (TimeField f : kBoundaryFields) {
      if (UnitOf(f) != u) continue;
      ops.push_back(Operation::ToBegin(f));
      ops.push_back(Operation::ToEnd(f));
    }
    if (Shiftable(u)) {
      ops.push_back(Operation::ToNext(u));
      ops.push_back(Operation::ToLast(u));
      for (int v : values) {
        if (v < 1) continue;
        ops.push_back(Operation::Forward(v, u));
        ops.push_back(Operation::Backward(v, u));
      }
    }
  }
  return SortSequence(std::move(ops));
}

bool RespectsPool(std::span<const Operation> seq,
                  const std::vector<int> &pool) {
  std::map<int, int> counts = Counts(pool);
  for (const Operation &op : seq) {
    for (int v : op.NumericParams()) {
      if (counts[v]-- <= 0) return false;
    }
  }
  return true;
}

CaptureResult Capture(const CaptureTask &task, const CaptureOptions &options) {
  CaptureResult result;
  const TemporalValue &target = task.target;
  if (!task.base.is_instant() || !target.IsValid()) return result;
  switch (target.kind()) {
    case ValueKind::kDuration: {
      OperationSequence seq;
      for (int i = 0; i < kNumTimeUnits; ++i) {
        TimeUnit u = static_cast<TimeUnit>(i);
        if (target.duration()[u] > 0) {
          seq.push_back(Operation::Add(target.duration()[u], u));
        }
      }
      if (RespectsPool(seq, task.pool)) {
        Finish(task.base, target, {seq}, &result);
      }
      break;
    }
    case ValueKind::kApproxRef:
      Finish(task.base, target, {{Operation::ApproxRef(target.ref())}},
             &result);
      break;
    case ValueKind::kInstant:
      if (target.instant().HasGeneric()) {
        CaptureSet(task, target.instant(), options, &result);
      } else {
        CaptureInstant(task, target.instant(), options, &result);
      }
      break;
  }
  return result;
}

}  // namespace timenorm
