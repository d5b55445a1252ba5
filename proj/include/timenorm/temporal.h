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

// Time units, time fields and temporal values, plus the codec between values
// and TIMEX3 value strings.
//
// An instant is a chain of field slots ordered coarse to fine. The chains
// that can be expressed are:
//
//   century
//   decade
//   year [-quarter | -season | -month [-dayOfMonth [time]] |
//         -week [-dayOfWeek [time]]]
//
// where time is either a day-part (MO/AF/EV/NI) or hour [:minute]. A slot
// may be generic ("X" digits) which is how recurring sets are represented:
// "2021-WXX" is year 2021 with a generic week slot.

#ifndef TIMENORM_TEMPORAL_H_
#define TIMENORM_TEMPORAL_H_

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "timenorm/error.h"

namespace timenorm {

// Ordered coarse to fine. Quarter and Season are parallel subdivisions of a
// year; the enum order only fixes a deterministic tie-break between them.
enum class TimeUnit : uint8_t {
  kCentury,
  kDecade,
  kYear,
  kQuarter,
  kSeason,
  kMonth,
  kWeek,
  kDay,
  kDayTime,
  kHour,
  kMinute,
  kSecond,
};

inline constexpr int kNumTimeUnits = 12;

// Granularity rank: smaller is coarser. Quarter and Season share a rank.
int UnitRank(TimeUnit unit);
inline bool IsCoarser(TimeUnit a, TimeUnit b) {
  return UnitRank(a) < UnitRank(b);
}
std::string_view UnitName(TimeUnit unit);
std::optional<TimeUnit> ParseUnit(std::string_view name);

enum class TimeField : uint8_t {
  kCentury,
  kDecade,
  kYear,
  kQuarterOfYear,
  kSeasonOfYear,
  kMonthOfYear,
  kMonthOfQuarter,
  kWeekOfYear,
  kDayOfMonth,
  kDayOfWeek,
  kDayTimeOfDay,
  kHourOfDay,
  kMinuteOfHour,
};

// A (unit, bounding unit) pair with inclusive value bounds. Unbounded fields
// (year, decade, century) have no bound unit.
struct FieldSpec {
  TimeUnit unit;
  std::optional<TimeUnit> bound;
  int lo;
  int hi;
  std::string_view name;
};

const FieldSpec &Spec(TimeField field);
inline TimeUnit UnitOf(TimeField field) { return Spec(field).unit; }
std::string_view FieldName(TimeField field);
std::optional<TimeField> ParseField(std::string_view name);

// Enumerable temporal constants.
enum class EnumKind : uint8_t { kMonth, kWeekday, kSeason, kDayTime };

struct EnumConst {
  EnumKind kind;
  // Month 1..12, weekday 1..7 (ISO, Monday = 1), season 1..4
  // (Spring, Summer, Fall, Winter), day-time 1..6 (Morning, Afternoon,
  // Evening, Night, Noon, Midnight).
  int index;

  auto operator<=>(const EnumConst &) const = default;
};

TimeUnit UnitOf(EnumKind kind);
std::string EnumName(EnumConst e);
std::optional<EnumConst> ParseEnum(std::string_view name);

enum class RefKind : uint8_t { kPast, kPresent, kFuture };

std::string_view RefName(RefKind r);
std::optional<RefKind> ParseRefName(std::string_view name);

// One populated field of an instant.
struct Slot {
  TimeField field;
  int value;
  bool generic;

  auto operator<=>(const Slot &) const = default;
};

class Instant {
 public:
  static constexpr int kMaxSlots = 5;

  Instant() = default;

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Slot &operator[](int i) const { return slots_[i]; }
  const Slot &back() const { return slots_[size_ - 1]; }

  // Appends a slot without validation; callers build chains coarse to fine.
  void Push(TimeField field, int value, bool generic = false);
  // Keeps the first n slots.
  void Resize(int n) { size_ = n; }

  // Index of the slot for field, or -1.
  int Find(TimeField field) const;
  bool Has(TimeField field) const { return Find(field) >= 0; }
  // Value of a concrete slot; nullopt when absent or generic.
  std::optional<int> Get(TimeField field) const;
  bool HasGeneric() const;

  // Finest populated field. Undefined for an empty instant.
  TimeField Granularity() const { return back().field; }

  // True when the chain shape and every value are valid.
  bool IsValid() const;

  bool operator==(const Instant &other) const;
  std::strong_ordering operator<=>(const Instant &other) const;

 private:
  std::array<Slot, kMaxSlots> slots_{};
  uint8_t size_ = 0;
};

struct Duration {
  // Count per TimeUnit; Season and DayTime are never populated.
  std::array<int, kNumTimeUnits> counts{};

  int &operator[](TimeUnit u) { return counts[static_cast<int>(u)]; }
  int operator[](TimeUnit u) const { return counts[static_cast<int>(u)]; }
  bool IsZero() const;
  static bool Supports(TimeUnit u);

  auto operator<=>(const Duration &) const = default;
};

enum class ValueKind : uint8_t { kInstant, kDuration, kApproxRef };

std::string_view ValueKindName(ValueKind kind);
std::optional<ValueKind> ParseValueKind(std::string_view name);

class TemporalValue {
 public:
  TemporalValue() : value_(Instant{}) {}
  TemporalValue(Instant v) : value_(v) {}      // NOLINT
  TemporalValue(Duration v) : value_(v) {}     // NOLINT
  TemporalValue(RefKind v) : value_(v) {}      // NOLINT

  ValueKind kind() const { return static_cast<ValueKind>(value_.index()); }
  bool is_instant() const { return kind() == ValueKind::kInstant; }
  bool is_duration() const { return kind() == ValueKind::kDuration; }
  bool is_ref() const { return kind() == ValueKind::kApproxRef; }

  const Instant &instant() const { return std::get<Instant>(value_); }
  Instant &instant() { return std::get<Instant>(value_); }
  const Duration &duration() const { return std::get<Duration>(value_); }
  Duration &duration() { return std::get<Duration>(value_); }
  RefKind ref() const { return std::get<RefKind>(value_); }

  bool IsValid() const;

  bool operator==(const TemporalValue &other) const = default;
  auto operator<=>(const TemporalValue &other) const = default;

 private:
  std::variant<Instant, Duration, RefKind> value_;
};

// Parses a TIMEX3 value string. Throws Error(kUnsupportedValueForm) for
// anything outside the supported grammar.
TemporalValue ParseTimexValue(std::string_view text);
std::optional<TemporalValue> TryParseTimexValue(std::string_view text);

// Canonical TIMEX3 value string.
std::string SerializeTimexValue(const TemporalValue &value);
std::string SerializeInstant(const Instant &value);

// Parses a document creation time: a full date with an optional time.
// Seconds and zone suffixes are dropped. Returns nullopt if no full date is
// present.
std::optional<Instant> ParseDct(std::string_view text);

// Coarsens an instant to the given unit, converting frames where the
// calendar allows (a day becomes its ISO week, a month its quarter or
// season). Returns nullopt when the unit cannot be derived from v.
std::optional<Instant> TryTruncate(const Instant &v, TimeUnit unit);
// Throws kWrongKind for non-instants and kIncomparableRange when the unit
// cannot be derived.
TemporalValue Truncate(const TemporalValue &v, TimeUnit unit);

// Signed number of `lower` steps from a to b, after checking that both
// agree on everything coarser than `upper` (nullopt = unbounded). Throws
// kIncomparableRange when either value cannot be projected to `lower`, or
// when they differ above `upper`.
int64_t FieldDiff(const TemporalValue &a, const TemporalValue &b,
                  std::optional<TimeUnit> upper, TimeUnit lower);
// Non-throwing projection-step count used by the search.
std::optional<int64_t> TryStepDiff(const Instant &a, const Instant &b,
                                   TimeUnit unit);

namespace calendar {

using Days = std::chrono::sys_days;

bool IsLeap(int year);
int DaysInMonth(int year, int month);
int WeeksInIsoYear(int year);
Days FromYmd(int year, int month, int day);
void ToYmd(Days d, int *year, int *month, int *day);
Days FromIsoWeek(int iso_year, int week, int weekday);
void ToIsoWeek(Days d, int *iso_year, int *week, int *weekday);
int IsoWeekday(Days d);
int SeasonOfMonth(int month);
int DayPartOfHour(int hour);

}  // namespace calendar

}  // namespace timenorm

#endif  // TIMENORM_TEMPORAL_H_
