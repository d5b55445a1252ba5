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

// The ten temporal operations, their canonical order and the executor.
//
// Textual syntax, used in rule files and debug output:
//
//   ModifyVal[5,dayOfWeek]  ModifyEnum[October]  CountEnum[1,Friday,month]
//   Equal[day]  ToBegin[monthOfQuarter]  ToEnd[dayOfMonth]
//   Forward[2,month]  Backward[2,month]  ToNext[week]  ToLast[year]
//   MakeSet[week]  Add[2,month]  ApproxRef[Past]
//
// Units are lower case, fields are written unitOfBound (or just the unit
// for unbounded fields), enum constants are capitalized and variables are
// written $k. A sequence is a comma separated list in parentheses.

#ifndef TIMENORM_OPERATION_H_
#define TIMENORM_OPERATION_H_

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "timenorm/temporal.h"

namespace timenorm {

enum class OpKind : uint8_t {
  kModifyVal,
  kModifyEnum,
  kCountEnum,
  kEqual,
  kToBegin,
  kToEnd,
  kForward,
  kBackward,
  kToNext,
  kToLast,
  kMakeSet,
  kAdd,
  kApproxRef,
};

std::string_view OpKindName(OpKind kind);

// Variable slot $index inside a rule.
struct Var {
  int index;
  auto operator<=>(const Var &) const = default;
};

using Param =
    std::variant<std::monostate, int, TimeUnit, TimeField, EnumConst, RefKind,
                 Var>;

// Value a pattern variable can be bound to.
using BoundValue = std::variant<int, TimeUnit, EnumConst>;

struct Operation {
  OpKind kind = OpKind::kEqual;
  std::array<Param, 3> params{};

  static Operation ModifyVal(int v, TimeField f);
  static Operation ModifyEnum(EnumConst e);
  static Operation CountEnum(int v, EnumConst e, TimeUnit scope);
  static Operation Equal(TimeUnit u);
  static Operation ToBegin(TimeField f);
  static Operation ToEnd(TimeField f);
  static Operation Forward(int v, TimeUnit u);
  static Operation Backward(int v, TimeUnit u);
  static Operation ToNext(TimeUnit u);
  static Operation ToLast(TimeUnit u);
  static Operation MakeSet(TimeUnit u);
  static Operation Add(int v, TimeUnit u);
  static Operation ApproxRef(RefKind r);

  bool HasVariables() const;
  // The unit the operation acts on, used for ordering and by the search.
  // nullopt when it depends on an unbound variable or for ApproxRef.
  std::optional<TimeUnit> Unit() const;
  // Integer parameters that must come from the expression's numbers.
  std::vector<int> NumericParams() const;

  auto operator<=>(const Operation &) const = default;
};

using OperationSequence = std::vector<Operation>;

std::string ToString(const Operation &op);
std::string ToString(std::span<const Operation> seq);
// Throws Error(kSyntax).
Operation ParseOperation(std::string_view text);
OperationSequence ParseSequence(std::string_view text);

// Canonical order: coarser unit first, then base-independent operations,
// then ToBegin/ToEnd, ToNext/ToLast, Forward/Backward, CountEnum, Equal.
// MakeSet goes last. Ties fall back to the textual form.
OperationSequence SortSequence(OperationSequence ops);
bool CanonicalLess(const Operation &a, const Operation &b);

// Applies one operation in place. Returns kOk or the failure code; never
// throws. This is the hot path of the search.
ErrorCode ApplyOperation(const Operation &op, TemporalValue *value);

// Runs the sequence left to right against base. Sequences containing Add
// start from an empty duration; ApproxRef sequences yield the reference.
ErrorCode TryExecute(std::span<const Operation> seq, const TemporalValue &base,
                     TemporalValue *out);
// Throwing variant.
TemporalValue Execute(std::span<const Operation> seq,
                      const TemporalValue &base);

// True iff some non-empty strict subsequence executes to the same value.
bool IsRedundant(std::span<const Operation> seq, const TemporalValue &base);

// Replaces variables with bound values. Returns nullopt when a variable is
// unbound or bound to a value of the wrong type for its position.
std::optional<Operation> Resolve(const Operation &op,
                                 std::span<const std::optional<BoundValue>>
                                     bindings);

}  // namespace timenorm

#endif  // TIMENORM_OPERATION_H_
