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

#include "timenorm/temporal.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace timenorm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kUnsupportedValueForm: return "UnsupportedValueForm";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kIncomparableRange: return "IncomparableRange";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kFieldOverflow: return "FieldOverflow";
    case ErrorCode::kEmptySequenceOnDuration: return "EmptySequenceOnDuration";
    case ErrorCode::kUnresolvedVariable: return "UnresolvedVariable";
    case ErrorCode::kKindConflict: return "KindConflict";
    case ErrorCode::kSyntax: return "Syntax";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingDct: return "MissingDct";
    case ErrorCode::kBadLine: return "BadLine";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

constexpr std::array<std::string_view, kNumTimeUnits> kUnitNames = {
    "century", "decade", "year", "quarter", "season",  "month",
    "week",    "day",    "daytime", "hour", "minute", "second"};

constexpr std::array<int, kNumTimeUnits> kUnitRanks = {0, 1, 2, 3, 3, 4,
                                                       5, 6, 7, 8, 9, 10};

const std::array<FieldSpec, 13> kFieldSpecs = {{
    {TimeUnit::kCentury, std::nullopt, 0, 99, "century"},
    {TimeUnit::kDecade, std::nullopt, 0, 999, "decade"},
    {TimeUnit::kYear, std::nullopt, 1, 9999, "year"},
    {TimeUnit::kQuarter, TimeUnit::kYear, 1, 4, "quarterOfYear"},
    {TimeUnit::kSeason, TimeUnit::kYear, 1, 4, "seasonOfYear"},
    {TimeUnit::kMonth, TimeUnit::kYear, 1, 12, "monthOfYear"},
    {TimeUnit::kMonth, TimeUnit::kQuarter, 1, 3, "monthOfQuarter"},
    {TimeUnit::kWeek, TimeUnit::kYear, 1, 53, "weekOfYear"},
    {TimeUnit::kDay, TimeUnit::kMonth, 1, 31, "dayOfMonth"},
    {TimeUnit::kDay, TimeUnit::kWeek, 1, 7, "dayOfWeek"},
    {TimeUnit::kDayTime, TimeUnit::kDay, 1, 4, "daytimeOfDay"},
    {TimeUnit::kHour, TimeUnit::kDay, 0, 23, "hourOfDay"},
    {TimeUnit::kMinute, TimeUnit::kHour, 0, 59, "minuteOfHour"},
}};

constexpr std::array<std::string_view, 12> kMonthNames = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday",
    "Sunday"};
constexpr std::array<std::string_view, 4> kSeasonNames = {"Spring", "Summer",
                                                          "Fall", "Winter"};
constexpr std::array<std::string_view, 6> kDayTimeNames = {
    "Morning", "Afternoon", "Evening", "Night", "Noon", "Midnight"};

constexpr std::array<std::string_view, 4> kSeasonCodes = {"SP", "SU", "FA",
                                                          "WI"};
constexpr std::array<std::string_view, 4> kDayPartCodes = {"MO", "AF", "EV",
                                                           "NI"};

// Duration designators in canonical order.
struct Designator {
  TimeUnit unit;
  std::string_view code;
  bool time_part;
};
constexpr std::array<Designator, 10> kDesignators = {{
    {TimeUnit::kCentury, "CE", false},
    {TimeUnit::kDecade, "DE", false},
    {TimeUnit::kYear, "Y", false},
    {TimeUnit::kQuarter, "Q", false},
    {TimeUnit::kMonth, "M", false},
    {TimeUnit::kWeek, "W", false},
    {TimeUnit::kDay, "D", false},
    {TimeUnit::kHour, "H", true},
    {TimeUnit::kMinute, "M", true},
    {TimeUnit::kSecond, "S", true},
}};

}  // namespace

int UnitRank(TimeUnit unit) { return kUnitRanks[static_cast<int>(unit)]; }

std::string_view UnitName(TimeUnit unit) {
  return kUnitNames[static_cast<int>(unit)];
}

std::optional<TimeUnit> ParseUnit(std::string_view name) {
  for (int i = 0; i < kNumTimeUnits; ++i) {
    if (kUnitNames[i] == name) return static_cast<TimeUnit>(i);
  }
  return std::nullopt;
}

const FieldSpec &Spec(TimeField field) {
  return kFieldSpecs[static_cast<int>(field)];
}

std::string_view FieldName(TimeField field) { return Spec(field).name; }

std::optional<TimeField> ParseField(std::string_view name) {
  for (size_t i = 0; i < kFieldSpecs.size(); ++i) {
    if (kFieldSpecs[i].name == name) return static_cast<TimeField>(i);
  }
  return std::nullopt;
}

TimeUnit UnitOf(EnumKind kind) {
  switch (kind) {
    case EnumKind::kMonth: return TimeUnit::kMonth;
    case EnumKind::kWeekday: return TimeUnit::kDay;
    case EnumKind::kSeason: return TimeUnit::kSeason;
    case EnumKind::kDayTime: return TimeUnit::kDayTime;
  }
  return TimeUnit::kDay;
}

std::string EnumName(EnumConst e) {
  switch (e.kind) {
    case EnumKind::kMonth: return std::string(kMonthNames[e.index - 1]);
    case EnumKind::kWeekday: return std::string(kWeekdayNames[e.index - 1]);
    case EnumKind::kSeason: return std::string(kSeasonNames[e.index - 1]);
    case EnumKind::kDayTime: return std::string(kDayTimeNames[e.index - 1]);
  }
  return {};
}

std::optional<EnumConst> ParseEnum(std::string_view name) {
  auto find = [&](auto &names, EnumKind kind) -> std::optional<EnumConst> {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return EnumConst{kind, static_cast<int>(i) + 1};
    }
    return std::nullopt;
  };
  if (auto e = find(kMonthNames, EnumKind::kMonth)) return e;
  if (auto e = find(kWeekdayNames, EnumKind::kWeekday)) return e;
  if (auto e = find(kSeasonNames, EnumKind::kSeason)) return e;
  return find(kDayTimeNames, EnumKind::kDayTime);
}

std::string_view RefName(RefKind r) {
  switch (r) {
    case RefKind::kPast: return "Past";
    case RefKind::kPresent: return "Present";
    case RefKind::kFuture: return "Future";
  }
  return "";
}

std::optional<RefKind> ParseRefName(std::string_view name) {
  if (name == "Past") return RefKind::kPast;
  if (name == "Present") return RefKind::kPresent;
  if (name == "Future") return RefKind::kFuture;
  return std::nullopt;
}

std::string_view ValueKindName(ValueKind kind) {
  switch (kind) {
    case ValueKind::kInstant: return "Instant";
    case ValueKind::kDuration: return "Duration";
    case ValueKind::kApproxRef: return "ApproxRef";
  }
  return "";
}

std::optional<ValueKind> ParseValueKind(std::string_view name) {
  if (name == "Instant") return ValueKind::kInstant;
  if (name == "Duration") return ValueKind::kDuration;
  if (name == "ApproxRef") return ValueKind::kApproxRef;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Calendar

namespace calendar {

namespace chr = std::chrono;

bool IsLeap(int year) { return chr::year{year}.is_leap(); }

int DaysInMonth(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (month == 2 && IsLeap(year)) return 29;
  return kDays[month - 1];
}

Days FromYmd(int year, int month, int day) {
  return Days{chr::year{year} / chr::month{static_cast<unsigned>(month)} /
              chr::day{static_cast<unsigned>(day)}};
}

void ToYmd(Days d, int *year, int *month, int *day) {
  chr::year_month_day ymd{d};
  *year = static_cast<int>(ymd.year());
  *month = static_cast<int>(static_cast<unsigned>(ymd.month()));
  *day = static_cast<int>(static_cast<unsigned>(ymd.day()));
}

int IsoWeekday(Days d) {
  return static_cast<int>(chr::weekday{d}.iso_encoding());
}

Days FromIsoWeek(int iso_year, int week, int weekday) {
  // Week 1 is the week containing January 4th.
  Days jan4 = FromYmd(iso_year, 1, 4);
  Days week1_monday = jan4 - chr::days{IsoWeekday(jan4) - 1};
  return week1_monday + chr::days{(week - 1) * 7 + (weekday - 1)};
}

void ToIsoWeek(Days d, int *iso_year, int *week, int *weekday) {
  *weekday = IsoWeekday(d);
  Days thursday = d + chr::days{4 - *weekday};
  int y, m, dd;
  ToYmd(thursday, &y, &m, &dd);
  *iso_year = y;
  *week = static_cast<int>((thursday - FromYmd(y, 1, 1)).count() / 7) + 1;
}

int WeeksInIsoYear(int year) {
  int y, w, wd;
  ToIsoWeek(FromYmd(year, 12, 28), &y, &w, &wd);
  return w;
}

int SeasonOfMonth(int month) {
  if (month >= 3 && month <= 5) return 1;
  if (month >= 6 && month <= 8) return 2;
  if (month >= 9 && month <= 11) return 3;
  return 4;
}

int DayPartOfHour(int hour) {
  if (hour >= 5 && hour <= 11) return 1;
  if (hour >= 12 && hour <= 16) return 2;
  if (hour >= 17 && hour <= 20) return 3;
  return 4;
}

}  // namespace calendar

// ---------------------------------------------------------------------------
// Instant

void Instant::Push(TimeField field, int value, bool generic) {
  slots_[size_++] = Slot{field, value, generic};
}

int Instant::Find(TimeField field) const {
  for (int i = 0; i < size_; ++i) {
    if (slots_[i].field == field) return i;
  }
  return -1;
}

std::optional<int> Instant::Get(TimeField field) const {
  int i = Find(field);
  if (i < 0 || slots_[i].generic) return std::nullopt;
  return slots_[i].value;
}

bool Instant::HasGeneric() const {
  for (int i = 0; i < size_; ++i) {
    if (slots_[i].generic) return true;
  }
  return false;
}

bool Instant::operator==(const Instant &other) const {
  if (size_ != other.size_) return false;
  for (int i = 0; i < size_; ++i) {
    if (slots_[i] != other.slots_[i]) return false;
  }
  return true;
}

std::strong_ordering Instant::operator<=>(const Instant &other) const {
  for (int i = 0; i < size_ && i < other.size_; ++i) {
    if (auto c = slots_[i] <=> other.slots_[i]; c != 0) return c;
  }
  return size_ <=> other.size_;
}

bool Instant::IsValid() const {
  if (size_ == 0) return false;
  const Slot &first = slots_[0];
  auto in_bounds = [](const Slot &s) {
    if (s.generic) return true;
    const FieldSpec &spec = Spec(s.field);
    return s.value >= spec.lo && s.value <= spec.hi;
  };
  for (int i = 0; i < size_; ++i) {
    if (!in_bounds(slots_[i])) return false;
    // Once a slot is generic every finer slot must be too.
    if (i > 0 && slots_[i - 1].generic && !slots_[i].generic) return false;
  }
  if (first.field == TimeField::kCentury || first.field == TimeField::kDecade)
    return size_ == 1 && !first.generic;
  if (first.field != TimeField::kYear) return false;
  if (size_ == 1) return !first.generic;

  const Slot &second = slots_[1];
  switch (second.field) {
    case TimeField::kQuarterOfYear:
    case TimeField::kSeasonOfYear:
      return size_ == 2 && !second.generic;
    case TimeField::kMonthOfYear:
    case TimeField::kWeekOfYear:
      break;
    default:
      return false;
  }
  bool week_frame = second.field == TimeField::kWeekOfYear;
  if (!first.generic && !second.generic && week_frame &&
      second.value > calendar::WeeksInIsoYear(first.value))
    return false;
  if (size_ == 2) {
    // A generic year needs at least week resolution ("XXXX-WXX").
    return !first.generic || week_frame;
  }
  const Slot &third = slots_[2];
  if (third.field !=
      (week_frame ? TimeField::kDayOfWeek : TimeField::kDayOfMonth))
    return false;
  if (!third.generic && !week_frame &&
      third.value > calendar::DaysInMonth(first.value, second.value))
    return false;
  if (size_ == 3) return true;
  if (third.generic) return false;
  const Slot &fourth = slots_[3];
  if (fourth.field == TimeField::kDayTimeOfDay) return size_ == 4;
  if (fourth.field != TimeField::kHourOfDay) return false;
  if (size_ == 4) return true;
  return size_ == 5 && slots_[4].field == TimeField::kMinuteOfHour;
}

bool Duration::IsZero() const {
  return std::all_of(counts.begin(), counts.end(),
                     [](int c) { return c == 0; });
}

bool Duration::Supports(TimeUnit u) {
  return u != TimeUnit::kSeason && u != TimeUnit::kDayTime;
}

bool TemporalValue::IsValid() const {
  switch (kind()) {
    case ValueKind::kInstant:
      return instant().IsValid();
    case ValueKind::kDuration: {
      const Duration &d = duration();
      for (int i = 0; i < kNumTimeUnits; ++i) {
        if (d.counts[i] < 0) return false;
        if (d.counts[i] > 0 && !Duration::Supports(static_cast<TimeUnit>(i)))
          return false;
      }
      return !d.IsZero();
    }
    case ValueKind::kApproxRef:
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Codec

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  bool Peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool Eat(char c) {
    if (!Peek(c)) return false;
    ++pos_;
    return true;
  }
  bool Eat(std::string_view token) {
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  // Exactly n digits, or n 'X' characters when allow_generic.
  bool Fixed(int n, int *value, bool *generic, bool allow_generic) {
    if (pos_ + n > s_.size()) return false;
    std::string_view part = s_.substr(pos_, n);
    if (std::all_of(part.begin(), part.end(),
                    [](char c) { return std::isdigit(c); })) {
      int v = 0;
      for (char c : part) v = v * 10 + (c - '0');
      *value = v;
      *generic = false;
    } else if (allow_generic &&
               std::all_of(part.begin(), part.end(),
                           [](char c) { return c == 'X'; })) {
      *value = 0;
      *generic = true;
    } else {
      return false;
    }
    pos_ += n;
    return true;
  }
  // One or more digits.
  bool Number(int *value) {
    size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(s_[pos_])) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) return false;
      ++pos_;
    }
    *value = static_cast<int>(v);
    return pos_ > start;
  }
  size_t remaining() const { return s_.size() - pos_; }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

std::optional<Duration> ParseDuration(std::string_view text) {
  Scanner sc(text);
  if (!sc.Eat('P')) return std::nullopt;
  Duration d;
  size_t next = 0;
  bool in_time = false;
  bool any = false;
  while (!sc.done()) {
    if (!in_time && sc.Eat('T')) {
      in_time = true;
      while (next < kDesignators.size() && !kDesignators[next].time_part)
        ++next;
      if (sc.done()) return std::nullopt;
      continue;
    }
    int n;
    if (!sc.Number(&n)) return std::nullopt;
    bool matched = false;
    for (; next < kDesignators.size(); ++next) {
      const Designator &des = kDesignators[next];
      if (des.time_part != in_time) {
        if (!in_time) break;
        continue;
      }
      if (sc.Eat(des.code)) {
        d[des.unit] = n;
        matched = true;
        ++next;
        break;
      }
    }
    if (!matched) return std::nullopt;
    any = true;
  }
  if (!any || d.IsZero()) return std::nullopt;
  return d;
}

std::optional<Instant> ParseInstant(std::string_view text) {
  Scanner sc(text);
  Instant v;
  int value;
  bool generic;
  size_t len = text.size();
  if (len == 2 || len == 3) {
    if (!sc.Fixed(static_cast<int>(len), &value, &generic, false))
      return std::nullopt;
    v.Push(len == 2 ? TimeField::kCentury : TimeField::kDecade, value);
    return v.IsValid() ? std::optional<Instant>(v) : std::nullopt;
  }
  if (!sc.Fixed(4, &value, &generic, true)) return std::nullopt;
  v.Push(TimeField::kYear, value, generic);
  bool has_day = false;
  if (sc.Eat('-')) {
    // Seasons first: "WI" would otherwise read as a week.
    bool season = false;
    for (size_t i = 0; i < kSeasonCodes.size(); ++i) {
      if (sc.Eat(kSeasonCodes[i])) {
        v.Push(TimeField::kSeasonOfYear, static_cast<int>(i) + 1);
        season = true;
        break;
      }
    }
    if (season) {
      // Nothing finer follows a season.
    } else if (sc.Eat('Q')) {
      if (!sc.Fixed(1, &value, &generic, false)) return std::nullopt;
      v.Push(TimeField::kQuarterOfYear, value);
    } else if (sc.Eat('W')) {
      if (!sc.Fixed(2, &value, &generic, true)) return std::nullopt;
      v.Push(TimeField::kWeekOfYear, value, generic);
      if (sc.Eat('-')) {
        if (!sc.Fixed(1, &value, &generic, true)) return std::nullopt;
        v.Push(TimeField::kDayOfWeek, value, generic);
        has_day = true;
      }
    } else {
      if (!sc.Fixed(2, &value, &generic, true)) return std::nullopt;
      v.Push(TimeField::kMonthOfYear, value, generic);
      if (sc.Eat('-')) {
        if (!sc.Fixed(2, &value, &generic, true)) return std::nullopt;
        v.Push(TimeField::kDayOfMonth, value, generic);
        has_day = true;
      }
    }
  }
  if (sc.Eat('T')) {
    if (!has_day) return std::nullopt;
    bool part = false;
    for (size_t i = 0; i < kDayPartCodes.size(); ++i) {
      if (sc.Eat(kDayPartCodes[i])) {
        v.Push(TimeField::kDayTimeOfDay, static_cast<int>(i) + 1);
        part = true;
        break;
      }
    }
    if (!part) {
      if (!sc.Fixed(2, &value, &generic, false)) return std::nullopt;
      v.Push(TimeField::kHourOfDay, value);
      if (sc.Eat(':')) {
        if (!sc.Fixed(2, &value, &generic, false)) return std::nullopt;
        v.Push(TimeField::kMinuteOfHour, value);
      }
    }
  }
  if (!sc.done() || !v.IsValid()) return std::nullopt;
  return v;
}

void AppendPadded(std::string *out, int value, int width) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%0*d", width, value);
  out->append(buf);
}

void AppendSlot(std::string *out, const Slot &s, int width) {
  if (s.generic) {
    out->append(width, 'X');
  } else {
    AppendPadded(out, s.value, width);
  }
}

}  // namespace

std::optional<TemporalValue> TryParseTimexValue(std::string_view text) {
  if (text == "PAST_REF") return TemporalValue(RefKind::kPast);
  if (text == "PRESENT_REF") return TemporalValue(RefKind::kPresent);
  if (text == "FUTURE_REF") return TemporalValue(RefKind::kFuture);
  if (!text.empty() && text[0] == 'P') {
    if (auto d = ParseDuration(text)) return TemporalValue(*d);
    return std::nullopt;
  }
  if (auto v = ParseInstant(text)) return TemporalValue(*v);
  return std::nullopt;
}

TemporalValue ParseTimexValue(std::string_view text) {
  auto v = TryParseTimexValue(text);
  if (!v) {
    throw Error(ErrorCode::kUnsupportedValueForm,
                "unsupported TIMEX3 value '" + std::string(text) + "'");
  }
  return *v;
}

std::string SerializeInstant(const Instant &v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    const Slot &s = v[i];
    switch (s.field) {
      case TimeField::kCentury: AppendSlot(&out, s, 2); break;
      case TimeField::kDecade: AppendSlot(&out, s, 3); break;
      case TimeField::kYear: AppendSlot(&out, s, 4); break;
      case TimeField::kQuarterOfYear:
        out += "-Q";
        AppendSlot(&out, s, 1);
        break;
      case TimeField::kSeasonOfYear:
        out += '-';
        out += kSeasonCodes[s.value - 1];
        break;
      case TimeField::kMonthOfYear:
      case TimeField::kDayOfMonth:
        out += '-';
        AppendSlot(&out, s, 2);
        break;
      case TimeField::kWeekOfYear:
        out += "-W";
        AppendSlot(&out, s, 2);
        break;
      case TimeField::kDayOfWeek:
        out += '-';
        AppendSlot(&out, s, 1);
        break;
      case TimeField::kDayTimeOfDay:
        out += 'T';
        out += kDayPartCodes[s.value - 1];
        break;
      case TimeField::kHourOfDay:
        out += 'T';
        AppendSlot(&out, s, 2);
        break;
      case TimeField::kMinuteOfHour:
        out += ':';
        AppendSlot(&out, s, 2);
        break;
      case TimeField::kMonthOfQuarter:
        // Never stored in an instant.
        break;
    }
  }
  return out;
}

std::string SerializeTimexValue(const TemporalValue &value) {
  switch (value.kind()) {
    case ValueKind::kInstant:
      return SerializeInstant(value.instant());
    case ValueKind::kApproxRef:
      switch (value.ref()) {
        case RefKind::kPast: return "PAST_REF";
        case RefKind::kPresent: return "PRESENT_REF";
        case RefKind::kFuture: return "FUTURE_REF";
      }
      return "";
    case ValueKind::kDuration: {
      const Duration &d = value.duration();
      std::string out = "P";
      bool time_started = false;
      for (const Designator &des : kDesignators) {
        int n = d[des.unit];
        if (n == 0) continue;
        if (des.time_part && !time_started) {
          out += 'T';
          time_started = true;
        }
        out += std::to_string(n);
        out += des.code;
      }
      return out;
    }
  }
  return "";
}

std::optional<Instant> ParseDct(std::string_view text) {
  if (text.size() < 10) return std::nullopt;
  auto v = ParseInstant(text.substr(0, 10));
  if (!v || v->size() != 3 || v->Granularity() != TimeField::kDayOfMonth)
    return std::nullopt;
  std::string_view rest = text.substr(10);
  if (rest.size() >= 3 && rest[0] == 'T' && std::isdigit(rest[1]) &&
      std::isdigit(rest[2])) {
    int hour = (rest[1] - '0') * 10 + (rest[2] - '0');
    if (hour <= 23) {
      v->Push(TimeField::kHourOfDay, hour);
      if (rest.size() >= 6 && rest[3] == ':' && std::isdigit(rest[4]) &&
          std::isdigit(rest[5])) {
        int minute = (rest[4] - '0') * 10 + (rest[5] - '0');
        if (minute <= 59) v->Push(TimeField::kMinuteOfHour, minute);
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Truncation and field differences

std::optional<Instant> TryTruncate(const Instant &v, TimeUnit unit) {
  if (v.empty()) return std::nullopt;
  for (int i = 0; i < v.size(); ++i) {
    if (UnitOf(v[i].field) == unit) {
      Instant out = v;
      out.Resize(i + 1);
      return out;
    }
  }
  Instant out;
  switch (unit) {
    case TimeUnit::kCentury:
      if (auto y = v.Get(TimeField::kYear)) {
        out.Push(TimeField::kCentury, *y / 100);
        return out;
      }
      if (auto d = v.Get(TimeField::kDecade)) {
        out.Push(TimeField::kCentury, *d / 10);
        return out;
      }
      return std::nullopt;
    case TimeUnit::kDecade:
      if (auto y = v.Get(TimeField::kYear)) {
        out.Push(TimeField::kDecade, *y / 10);
        return out;
      }
      return std::nullopt;
    case TimeUnit::kQuarter:
    case TimeUnit::kSeason: {
      auto y = v.Get(TimeField::kYear);
      auto m = v.Get(TimeField::kMonthOfYear);
      if (!y || !m) return std::nullopt;
      out.Push(TimeField::kYear, *y);
      if (unit == TimeUnit::kQuarter) {
        out.Push(TimeField::kQuarterOfYear, (*m - 1) / 3 + 1);
      } else {
        out.Push(TimeField::kSeasonOfYear, calendar::SeasonOfMonth(*m));
      }
      return out;
    }
    case TimeUnit::kMonth: {
      auto y = v.Get(TimeField::kYear);
      auto w = v.Get(TimeField::kWeekOfYear);
      if (!y || !w) return std::nullopt;
      int wd = v.Get(TimeField::kDayOfWeek).value_or(4);
      int yy, mm, dd;
      calendar::ToYmd(calendar::FromIsoWeek(*y, *w, wd), &yy, &mm, &dd);
      out.Push(TimeField::kYear, yy);
      out.Push(TimeField::kMonthOfYear, mm);
      return out;
    }
    case TimeUnit::kWeek: {
      auto y = v.Get(TimeField::kYear);
      auto m = v.Get(TimeField::kMonthOfYear);
      auto d = v.Get(TimeField::kDayOfMonth);
      if (!y || !m || !d) return std::nullopt;
      int iy, iw, iwd;
      calendar::ToIsoWeek(calendar::FromYmd(*y, *m, *d), &iy, &iw, &iwd);
      out.Push(TimeField::kYear, iy);
      out.Push(TimeField::kWeekOfYear, iw);
      return out;
    }
    case TimeUnit::kDayTime: {
      int h = v.Find(TimeField::kHourOfDay);
      if (h < 0) return std::nullopt;
      out = v;
      out.Resize(h);
      out.Push(TimeField::kDayTimeOfDay, calendar::DayPartOfHour(v[h].value));
      return out;
    }
    default:
      return std::nullopt;
  }
}

TemporalValue Truncate(const TemporalValue &v, TimeUnit unit) {
  if (!v.is_instant()) {
    throw Error(ErrorCode::kWrongKind, "truncate needs an instant");
  }
  auto out = TryTruncate(v.instant(), unit);
  if (!out) {
    throw Error(ErrorCode::kIncomparableRange,
                "cannot truncate " + SerializeInstant(v.instant()) + " to " +
                    std::string(UnitName(unit)));
  }
  return *out;
}

namespace {

std::optional<int64_t> DayIndex(const Instant &p) {
  auto y = p.Get(TimeField::kYear);
  if (!y) return std::nullopt;
  if (auto w = p.Get(TimeField::kWeekOfYear)) {
    auto wd = p.Get(TimeField::kDayOfWeek);
    if (!wd) return std::nullopt;
    return calendar::FromIsoWeek(*y, *w, *wd).time_since_epoch().count();
  }
  auto m = p.Get(TimeField::kMonthOfYear);
  auto d = p.Get(TimeField::kDayOfMonth);
  if (!m || !d) return std::nullopt;
  return calendar::FromYmd(*y, *m, *d).time_since_epoch().count();
}

// Absolute index of the unit-sized step containing p, where p is already a
// projection onto unit.
std::optional<int64_t> StepIndex(const Instant &p, TimeUnit unit) {
  if (p.HasGeneric()) return std::nullopt;
  switch (unit) {
    case TimeUnit::kCentury:
      return p.Get(TimeField::kCentury);
    case TimeUnit::kDecade:
      return p.Get(TimeField::kDecade);
    case TimeUnit::kYear:
      return p.Get(TimeField::kYear);
    case TimeUnit::kQuarter: {
      auto y = p.Get(TimeField::kYear);
      auto q = p.Get(TimeField::kQuarterOfYear);
      if (!y || !q) return std::nullopt;
      return int64_t{*y} * 4 + *q - 1;
    }
    case TimeUnit::kSeason: {
      auto y = p.Get(TimeField::kYear);
      auto s = p.Get(TimeField::kSeasonOfYear);
      if (!y || !s) return std::nullopt;
      return int64_t{*y} * 4 + *s - 1;
    }
    case TimeUnit::kMonth: {
      auto y = p.Get(TimeField::kYear);
      auto m = p.Get(TimeField::kMonthOfYear);
      if (!y || !m) return std::nullopt;
      return int64_t{*y} * 12 + *m - 1;
    }
    case TimeUnit::kWeek: {
      auto y = p.Get(TimeField::kYear);
      auto w = p.Get(TimeField::kWeekOfYear);
      if (!y || !w) return std::nullopt;
      int64_t monday =
          calendar::FromIsoWeek(*y, *w, 1).time_since_epoch().count();
      // Floor division; the epoch is a Thursday so shift to Monday first.
      int64_t shifted = monday + 3;
      return shifted >= 0 ? shifted / 7 : -((-shifted + 6) / 7);
    }
    case TimeUnit::kDay:
      return DayIndex(p);
    case TimeUnit::kDayTime: {
      auto day = DayIndex(p);
      auto part = p.Get(TimeField::kDayTimeOfDay);
      if (!day || !part) return std::nullopt;
      return *day * 4 + *part - 1;
    }
    case TimeUnit::kHour: {
      auto day = DayIndex(p);
      auto h = p.Get(TimeField::kHourOfDay);
      if (!day || !h) return std::nullopt;
      return *day * 24 + *h;
    }
    case TimeUnit::kMinute: {
      auto day = DayIndex(p);
      auto h = p.Get(TimeField::kHourOfDay);
      auto m = p.Get(TimeField::kMinuteOfHour);
      if (!day || !h || !m) return std::nullopt;
      return (*day * 24 + *h) * 60 + *m;
    }
    case TimeUnit::kSecond:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int64_t> TryStepDiff(const Instant &a, const Instant &b,
                                   TimeUnit unit) {
  auto pa = TryTruncate(a, unit);
  auto pb = TryTruncate(b, unit);
  if (!pa || !pb) return std::nullopt;
  auto ia = StepIndex(*pa, unit);
  auto ib = StepIndex(*pb, unit);
  if (!ia || !ib) return std::nullopt;
  return *ib - *ia;
}

int64_t FieldDiff(const TemporalValue &a, const TemporalValue &b,
                  std::optional<TimeUnit> upper, TimeUnit lower) {
  if (!a.is_instant() || !b.is_instant()) {
    throw Error(ErrorCode::kWrongKind, "field difference needs instants");
  }
  if (upper) {
    for (int u = 0; u < kNumTimeUnits; ++u) {
      TimeUnit coarser = static_cast<TimeUnit>(u);
      if (!IsCoarser(coarser, *upper)) continue;
      auto pa = TryTruncate(a.instant(), coarser);
      auto pb = TryTruncate(b.instant(), coarser);
      if (pa && pb && *pa != *pb) {
        throw Error(ErrorCode::kIncomparableRange,
                    "values differ above " + std::string(UnitName(*upper)));
      }
    }
  }
  auto diff = TryStepDiff(a.instant(), b.instant(), lower);
  if (!diff) {
    throw Error(ErrorCode::kIncomparableRange,
                "cannot compare at " + std::string(UnitName(lower)));
  }
  return *diff;
}

}  // namespace timenorm
