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

#include "timenorm/operation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

namespace timenorm {

namespace {

using calendar::Days;
namespace chr = std::chrono;

constexpr std::array<std::string_view, 13> kOpNames = {
    "ModifyVal", "ModifyEnum", "CountEnum", "Equal",   "ToBegin",
    "ToEnd",     "Forward",    "Backward",  "ToNext",  "ToLast",
    "MakeSet",   "Add",        "ApproxRef"};

// Parameter signature per operation kind: i = integer, u = unit,
// f = field, e = enum constant, r = approximate reference.
constexpr std::array<std::string_view, 13> kSignatures = {
    "if", "e", "ieu", "u", "f", "f", "iu", "iu", "u", "u", "u", "iu", "r"};

std::string_view Signature(OpKind kind) {
  return kSignatures[static_cast<int>(kind)];
}

// ----- instant helpers -----------------------------------------------------

bool IsWeekFrame(const Instant &v) {
  return v.size() >= 2 && v[1].field == TimeField::kWeekOfYear;
}

// Index of the day slot (dayOfMonth or dayOfWeek), or -1.
int DayIndexOf(const Instant &v) {
  int i = v.Find(TimeField::kDayOfMonth);
  return i >= 0 ? i : v.Find(TimeField::kDayOfWeek);
}

std::optional<Days> DateOf(const Instant &v) {
  auto y = v.Get(TimeField::kYear);
  if (!y) return std::nullopt;
  if (IsWeekFrame(v)) {
    auto w = v.Get(TimeField::kWeekOfYear);
    auto wd = v.Get(TimeField::kDayOfWeek);
    if (!w || !wd) return std::nullopt;
    return calendar::FromIsoWeek(*y, *w, *wd);
  }
  auto m = v.Get(TimeField::kMonthOfYear);
  auto d = v.Get(TimeField::kDayOfMonth);
  if (!m || !d) return std::nullopt;
  return calendar::FromYmd(*y, *m, *d);
}

bool YearInRange(int y) { return y >= 1 && y <= 9999; }

// Builds a day-level instant in the same frame as `like`.
ErrorCode PushDate(Days d, bool week_frame, Instant *out) {
  if (week_frame) {
    int iy, iw, iwd;
    calendar::ToIsoWeek(d, &iy, &iw, &iwd);
    if (!YearInRange(iy)) return ErrorCode::kFieldOverflow;
    out->Push(TimeField::kYear, iy);
    out->Push(TimeField::kWeekOfYear, iw);
    out->Push(TimeField::kDayOfWeek, iwd);
  } else {
    int y, m, dd;
    calendar::ToYmd(d, &y, &m, &dd);
    if (!YearInRange(y)) return ErrorCode::kFieldOverflow;
    out->Push(TimeField::kYear, y);
    out->Push(TimeField::kMonthOfYear, m);
    out->Push(TimeField::kDayOfMonth, dd);
  }
  return ErrorCode::kOk;
}

void CopyFrom(const Instant &v, int from, Instant *out) {
  for (int i = from; i < v.size(); ++i) {
    out->Push(v[i].field, v[i].value, v[i].generic);
  }
}

ErrorCode SetYear(const Instant &v, int year, Instant *out) {
  if (!YearInRange(year)) return ErrorCode::kFieldOverflow;
  Instant r;
  r.Push(TimeField::kYear, year);
  for (int i = 1; i < v.size(); ++i) {
    Slot s = v[i];
    if (!s.generic) {
      if (s.field == TimeField::kWeekOfYear) {
        s.value = std::min(s.value, calendar::WeeksInIsoYear(year));
      } else if (s.field == TimeField::kDayOfMonth) {
        auto m = v.Get(TimeField::kMonthOfYear);
        if (m) s.value = std::min(s.value, calendar::DaysInMonth(year, *m));
      }
    }
    r.Push(s.field, s.value, s.generic);
  }
  *out = r;
  return ErrorCode::kOk;
}

ErrorCode AddMonths(const Instant &v, int64_t n, Instant *out) {
  auto y = v.Get(TimeField::kYear);
  auto m = v.Get(TimeField::kMonthOfYear);
  if (!y || !m || IsWeekFrame(v)) return ErrorCode::kKindMismatch;
  int64_t idx = int64_t{*y} * 12 + (*m - 1) + n;
  int64_t ny = idx >= 0 ? idx / 12 : -((-idx + 11) / 12);
  int nm = static_cast<int>(idx - ny * 12) + 1;
  if (!YearInRange(static_cast<int>(ny)) || ny > 9999)
    return ErrorCode::kFieldOverflow;
  Instant r;
  r.Push(TimeField::kYear, static_cast<int>(ny));
  r.Push(TimeField::kMonthOfYear, nm);
  int d = v.Find(TimeField::kDayOfMonth);
  if (d >= 0) {
    if (v[d].generic) return ErrorCode::kKindMismatch;
    r.Push(TimeField::kDayOfMonth,
           std::min(v[d].value,
                    calendar::DaysInMonth(static_cast<int>(ny), nm)));
    CopyFrom(v, d + 1, &r);
  }
  *out = r;
  return ErrorCode::kOk;
}

ErrorCode Shift(const Instant &v, int64_t n, TimeUnit unit, Instant *out) {
  if (v.empty() || v.HasGeneric()) return ErrorCode::kKindMismatch;
  const Slot &first = v[0];
  switch (unit) {
    case TimeUnit::kCentury:
    case TimeUnit::kDecade:
    case TimeUnit::kYear: {
      int64_t per_year = unit == TimeUnit::kCentury  ? 100
                         : unit == TimeUnit::kDecade ? 10
                                                     : 1;
      if (first.field == TimeField::kYear) {
        int64_t y = first.value + n * per_year;
        if (y < 1 || y > 9999) return ErrorCode::kFieldOverflow;
        return SetYear(v, static_cast<int>(y), out);
      }
      if (first.field == TimeField::kDecade && unit != TimeUnit::kYear) {
        int64_t d = first.value + n * (unit == TimeUnit::kCentury ? 10 : 1);
        if (d < 0 || d > 999) return ErrorCode::kFieldOverflow;
        Instant r;
        r.Push(TimeField::kDecade, static_cast<int>(d));
        *out = r;
        return ErrorCode::kOk;
      }
      if (first.field == TimeField::kCentury && unit == TimeUnit::kCentury) {
        int64_t c = first.value + n;
        if (c < 0 || c > 99) return ErrorCode::kFieldOverflow;
        Instant r;
        r.Push(TimeField::kCentury, static_cast<int>(c));
        *out = r;
        return ErrorCode::kOk;
      }
      return ErrorCode::kKindMismatch;
    }
    case TimeUnit::kQuarter:
    case TimeUnit::kSeason: {
      TimeField f = unit == TimeUnit::kQuarter ? TimeField::kQuarterOfYear
                                               : TimeField::kSeasonOfYear;
      if (v.size() == 2 && v[1].field == f) {
        int64_t idx = int64_t{first.value} * 4 + (v[1].value - 1) + n;
        int64_t ny = idx >= 0 ? idx / 4 : -((-idx + 3) / 4);
        if (ny < 1 || ny > 9999) return ErrorCode::kFieldOverflow;
        Instant r;
        r.Push(TimeField::kYear, static_cast<int>(ny));
        r.Push(f, static_cast<int>(idx - ny * 4) + 1);
        *out = r;
        return ErrorCode::kOk;
      }
      if (unit == TimeUnit::kQuarter) return AddMonths(v, 3 * n, out);
      return ErrorCode::kKindMismatch;
    }
    case TimeUnit::kMonth:
      return AddMonths(v, n, out);
    case TimeUnit::kWeek:
    case TimeUnit::kDay: {
      int64_t days = unit == TimeUnit::kWeek ? 7 * n : n;
      if (auto d = DateOf(v)) {
        Instant r;
        ErrorCode rc = PushDate(*d + chr::days{days}, IsWeekFrame(v), &r);
        if (rc != ErrorCode::kOk) return rc;
        CopyFrom(v, DayIndexOf(v) + 1, &r);
        *out = r;
        return ErrorCode::kOk;
      }
      if (unit == TimeUnit::kWeek && v.size() == 2 && IsWeekFrame(v)) {
        Days monday = calendar::FromIsoWeek(first.value, v[1].value, 1) +
                      chr::days{days};
        int iy, iw, iwd;
        calendar::ToIsoWeek(monday, &iy, &iw, &iwd);
        if (!YearInRange(iy)) return ErrorCode::kFieldOverflow;
        Instant r;
        r.Push(TimeField::kYear, iy);
        r.Push(TimeField::kWeekOfYear, iw);
        *out = r;
        return ErrorCode::kOk;
      }
      return ErrorCode::kKindMismatch;
    }
    case TimeUnit::kHour:
    case TimeUnit::kMinute: {
      int h = v.Find(TimeField::kHourOfDay);
      if (h < 0) return ErrorCode::kKindMismatch;
      int mi = v.Find(TimeField::kMinuteOfHour);
      if (unit == TimeUnit::kMinute && mi < 0) return ErrorCode::kKindMismatch;
      auto d = DateOf(v);
      if (!d) return ErrorCode::kKindMismatch;
      int64_t minutes = (d->time_since_epoch().count() * 24 + v[h].value) *
                            60 +
                        (mi >= 0 ? v[mi].value : 0);
      minutes += unit == TimeUnit::kHour ? 60 * n : n;
      int64_t total_hours = minutes >= 0 ? minutes / 60 : -((-minutes + 59) / 60);
      int64_t day = total_hours >= 0 ? total_hours / 24
                                     : -((-total_hours + 23) / 24);
      Instant r;
      ErrorCode rc = PushDate(Days{chr::days{day}}, IsWeekFrame(v), &r);
      if (rc != ErrorCode::kOk) return rc;
      r.Push(TimeField::kHourOfDay, static_cast<int>(total_hours - day * 24));
      if (mi >= 0) {
        r.Push(TimeField::kMinuteOfHour,
               static_cast<int>(minutes - total_hours * 60));
      }
      *out = r;
      return ErrorCode::kOk;
    }
    default:
      return ErrorCode::kKindMismatch;
  }
}

ErrorCode ModifyValue(const Instant &v, TimeField field, int value,
                      Instant *out) {
  const FieldSpec &spec = Spec(field);
  if (value < spec.lo || value > spec.hi) return ErrorCode::kFieldOverflow;
  Instant r;
  auto year_slot = [&]() -> bool {
    if (v.empty() || v[0].field != TimeField::kYear) return false;
    r.Push(TimeField::kYear, v[0].value, v[0].generic);
    return true;
  };
  switch (field) {
    case TimeField::kCentury:
    case TimeField::kDecade:
    case TimeField::kYear:
      r.Push(field, value);
      break;
    case TimeField::kQuarterOfYear:
    case TimeField::kSeasonOfYear:
    case TimeField::kMonthOfYear:
      if (!year_slot()) return ErrorCode::kKindMismatch;
      r.Push(field, value);
      break;
    case TimeField::kWeekOfYear:
      if (!year_slot()) return ErrorCode::kKindMismatch;
      if (!v[0].generic && value > calendar::WeeksInIsoYear(v[0].value))
        return ErrorCode::kFieldOverflow;
      r.Push(field, value);
      break;
    case TimeField::kMonthOfQuarter: {
      auto y = v.Get(TimeField::kYear);
      if (!y) return ErrorCode::kKindMismatch;
      int q;
      if (auto qq = v.Get(TimeField::kQuarterOfYear)) {
        q = *qq;
      } else if (auto m = v.Get(TimeField::kMonthOfYear)) {
        q = (*m - 1) / 3 + 1;
      } else {
        return ErrorCode::kKindMismatch;
      }
      r.Push(TimeField::kYear, *y);
      r.Push(TimeField::kMonthOfYear, (q - 1) * 3 + value);
      break;
    }
    case TimeField::kDayOfMonth: {
      int m = v.Find(TimeField::kMonthOfYear);
      if (m < 0 || v[m].generic) return ErrorCode::kKindMismatch;
      if (!v[0].generic &&
          value > calendar::DaysInMonth(v[0].value, v[m].value))
        return ErrorCode::kFieldOverflow;
      CopyFrom(v, 0, &r);
      r.Resize(m + 1);
      r.Push(field, value);
      break;
    }
    case TimeField::kDayOfWeek: {
      if (IsWeekFrame(v) && !v[1].generic) {
        r.Push(TimeField::kYear, v[0].value, v[0].generic);
        r.Push(TimeField::kWeekOfYear, v[1].value);
        r.Push(field, value);
        break;
      }
      auto d = DateOf(v);
      if (!d) return ErrorCode::kKindMismatch;
      Days target = *d + chr::days{value - calendar::IsoWeekday(*d)};
      ErrorCode rc = PushDate(target, false, &r);
      if (rc != ErrorCode::kOk) return rc;
      break;
    }
    case TimeField::kDayTimeOfDay:
    case TimeField::kHourOfDay: {
      int d = DayIndexOf(v);
      if (d < 0 || v[d].generic) return ErrorCode::kKindMismatch;
      CopyFrom(v, 0, &r);
      r.Resize(d + 1);
      r.Push(field, value);
      break;
    }
    case TimeField::kMinuteOfHour: {
      int h = v.Find(TimeField::kHourOfDay);
      if (h < 0) return ErrorCode::kKindMismatch;
      CopyFrom(v, 0, &r);
      r.Resize(h + 1);
      r.Push(field, value);
      break;
    }
  }
  *out = r;
  return ErrorCode::kOk;
}

ErrorCode ModifyEnumValue(const Instant &v, EnumConst e, Instant *out) {
  switch (e.kind) {
    case EnumKind::kMonth:
      return ModifyValue(v, TimeField::kMonthOfYear, e.index, out);
    case EnumKind::kWeekday:
      return ModifyValue(v, TimeField::kDayOfWeek, e.index, out);
    case EnumKind::kSeason:
      return ModifyValue(v, TimeField::kSeasonOfYear, e.index, out);
    case EnumKind::kDayTime:
      if (e.index <= 4) {
        return ModifyValue(v, TimeField::kDayTimeOfDay, e.index, out);
      } else {
        // Noon and midnight name clock times.
        Instant r;
        ErrorCode rc = ModifyValue(v, TimeField::kHourOfDay,
                                   e.index == 5 ? 12 : 0, &r);
        if (rc != ErrorCode::kOk) return rc;
        r.Push(TimeField::kMinuteOfHour, 0);
        *out = r;
        return ErrorCode::kOk;
      }
  }
  return ErrorCode::kKindMismatch;
}

ErrorCode CountEnumValue(const Instant &v, int n, EnumConst e, TimeUnit scope,
                         Instant *out) {
  if (e.kind != EnumKind::kWeekday || n < 1) return ErrorCode::kKindMismatch;
  auto y = v.Get(TimeField::kYear);
  if (!y) return ErrorCode::kKindMismatch;
  Days start;
  Days end;
  if (scope == TimeUnit::kMonth) {
    auto m = v.Get(TimeField::kMonthOfYear);
    if (!m || IsWeekFrame(v)) return ErrorCode::kKindMismatch;
    start = calendar::FromYmd(*y, *m, 1);
    end = start + chr::days{calendar::DaysInMonth(*y, *m)};
  } else if (scope == TimeUnit::kYear) {
    start = calendar::FromYmd(*y, 1, 1);
    end = calendar::FromYmd(*y, 12, 31) + chr::days{1};
  } else {
    return ErrorCode::kKindMismatch;
  }
  int offset = (e.index - calendar::IsoWeekday(start) + 7) % 7;
  Days target = start + chr::days{offset + 7 * (n - 1)};
  if (target >= end) return ErrorCode::kFieldOverflow;
  Instant r;
  ErrorCode rc = PushDate(target, false, &r);
  if (rc != ErrorCode::kOk) return rc;
  *out = r;
  return ErrorCode::kOk;
}

ErrorCode ToBoundary(const Instant &v, TimeField field, bool begin,
                     Instant *out) {
  auto y = v.Get(TimeField::kYear);
  Instant r;
  switch (field) {
    case TimeField::kMonthOfQuarter: {
      if (!y) return ErrorCode::kKindMismatch;
      int q;
      if (auto qq = v.Get(TimeField::kQuarterOfYear)) {
        q = *qq;
      } else if (auto m = v.Get(TimeField::kMonthOfYear)) {
        q = (*m - 1) / 3 + 1;
      } else {
        return ErrorCode::kKindMismatch;
      }
      r.Push(TimeField::kYear, *y);
      r.Push(TimeField::kMonthOfYear, (q - 1) * 3 + (begin ? 1 : 3));
      break;
    }
    case TimeField::kMonthOfYear:
    case TimeField::kQuarterOfYear:
      if (!y) return ErrorCode::kKindMismatch;
      r.Push(TimeField::kYear, *y);
      r.Push(field, begin ? 1 : Spec(field).hi);
      break;
    case TimeField::kWeekOfYear:
      if (!y) return ErrorCode::kKindMismatch;
      r.Push(TimeField::kYear, *y);
      r.Push(field, begin ? 1 : calendar::WeeksInIsoYear(*y));
      break;
    case TimeField::kDayOfMonth: {
      auto m = v.Get(TimeField::kMonthOfYear);
      if (!y || !m || IsWeekFrame(v)) return ErrorCode::kKindMismatch;
      r.Push(TimeField::kYear, *y);
      r.Push(TimeField::kMonthOfYear, *m);
      r.Push(field, begin ? 1 : calendar::DaysInMonth(*y, *m));
      break;
    }
    case TimeField::kDayOfWeek:
      return ModifyValue(v, TimeField::kDayOfWeek, begin ? 1 : 7, out);
    case TimeField::kHourOfDay:
      return ModifyValue(v, TimeField::kHourOfDay, begin ? 0 : 23, out);
    default:
      return ErrorCode::kKindMismatch;
  }
  *out = r;
  return ErrorCode::kOk;
}

ErrorCode MakeSetValue(const Instant &v, TimeUnit unit, Instant *out) {
  Instant r;
  bool has_year = !v.empty() && v[0].field == TimeField::kYear;
  auto push_year = [&] { r.Push(TimeField::kYear, v[0].value, v[0].generic); };
  switch (unit) {
    case TimeUnit::kYear:
      r.Push(TimeField::kYear, 0, true);
      break;
    case TimeUnit::kMonth:
      if (!has_year) return ErrorCode::kKindMismatch;
      push_year();
      r.Push(TimeField::kMonthOfYear, 0, true);
      break;
    case TimeUnit::kWeek:
      if (!has_year) return ErrorCode::kKindMismatch;
      push_year();
      r.Push(TimeField::kWeekOfYear, 0, true);
      break;
    case TimeUnit::kDay:
      if (!has_year) return ErrorCode::kKindMismatch;
      push_year();
      if (IsWeekFrame(v)) {
        r.Push(TimeField::kWeekOfYear, v[1].value, v[1].generic);
        r.Push(TimeField::kDayOfWeek, 0, true);
      } else if (v.Has(TimeField::kMonthOfYear)) {
        r.Push(TimeField::kMonthOfYear, v[1].value, v[1].generic);
        r.Push(TimeField::kDayOfMonth, 0, true);
      } else if (v.size() == 1) {
        r.Push(TimeField::kMonthOfYear, 0, true);
        r.Push(TimeField::kDayOfMonth, 0, true);
      } else {
        return ErrorCode::kKindMismatch;
      }
      break;
    default:
      return ErrorCode::kKindMismatch;
  }
  *out = r;
  return ErrorCode::kOk;
}

int ClassRank(OpKind kind) {
  switch (kind) {
    case OpKind::kModifyVal:
    case OpKind::kModifyEnum:
    case OpKind::kAdd:
    case OpKind::kApproxRef:
      return 0;
    case OpKind::kToBegin:
    case OpKind::kToEnd:
      return 1;
    case OpKind::kToNext:
    case OpKind::kToLast:
      return 2;
    case OpKind::kForward:
    case OpKind::kBackward:
      return 3;
    case OpKind::kCountEnum:
      return 4;
    case OpKind::kEqual:
      return 5;
    case OpKind::kMakeSet:
      return 6;
  }
  return 7;
}

std::string ParamToString(const Param &p) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(int v) const { return std::to_string(v); }
    std::string operator()(TimeUnit u) const {
      return std::string(UnitName(u));
    }
    std::string operator()(TimeField f) const {
      return std::string(FieldName(f));
    }
    std::string operator()(EnumConst e) const { return EnumName(e); }
    std::string operator()(RefKind r) const { return std::string(RefName(r)); }
    std::string operator()(Var v) const {
      return "$" + std::to_string(v.index);
    }
  };
  return std::visit(Visitor{}, p);
}

std::optional<Param> ParseParam(std::string_view text, char type) {
  if (text.size() > 1 && text[0] == '$') {
    int k = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size() || k < 1)
      return std::nullopt;
    return Param(Var{k});
  }
  switch (type) {
    case 'i': {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size())
        return std::nullopt;
      return Param(v);
    }
    case 'u':
      if (auto u = ParseUnit(text)) return Param(*u);
      return std::nullopt;
    case 'f':
      if (auto f = ParseField(text)) return Param(*f);
      return std::nullopt;
    case 'e':
      if (auto e = ParseEnum(text)) return Param(*e);
      return std::nullopt;
    case 'r':
      if (auto r = ParseRefName(text)) return Param(*r);
      return std::nullopt;
  }
  return std::nullopt;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view OpKindName(OpKind kind) {
  return kOpNames[static_cast<int>(kind)];
}

Operation Operation::ModifyVal(int v, TimeField f) {
  return {OpKind::kModifyVal, {v, f, {}}};
}
Operation Operation::ModifyEnum(EnumConst e) {
  return {OpKind::kModifyEnum, {e, {}, {}}};
}
Operation Operation::CountEnum(int v, EnumConst e, TimeUnit scope) {
  return {OpKind::kCountEnum, {v, e, scope}};
}
Operation Operation::Equal(TimeUnit u) { return {OpKind::kEqual, {u, {}, {}}}; }
Operation Operation::ToBegin(TimeField f) {
  return {OpKind::kToBegin, {f, {}, {}}};
}
Operation Operation::ToEnd(TimeField f) { return {OpKind::kToEnd, {f, {}, {}}}; }
Operation Operation::Forward(int v, TimeUnit u) {
  return {OpKind::kForward, {v, u, {}}};
}
Operation Operation::Backward(int v, TimeUnit u) {
  return {OpKind::kBackward, {v, u, {}}};
}
Operation Operation::ToNext(TimeUnit u) {
  return {OpKind::kToNext, {u, {}, {}}};
}
Operation Operation::ToLast(TimeUnit u) {
  return {OpKind::kToLast, {u, {}, {}}};
}
Operation Operation::MakeSet(TimeUnit u) {
  return {OpKind::kMakeSet, {u, {}, {}}};
}
Operation Operation::Add(int v, TimeUnit u) { return {OpKind::kAdd, {v, u, {}}}; }
Operation Operation::ApproxRef(RefKind r) {
  return {OpKind::kApproxRef, {r, {}, {}}};
}

bool Operation::HasVariables() const {
  return std::any_of(params.begin(), params.end(), [](const Param &p) {
    return std::holds_alternative<Var>(p);
  });
}

std::optional<TimeUnit> Operation::Unit() const {
  const Param &p0 = params[0];
  switch (kind) {
    case OpKind::kModifyVal:
      if (auto *f = std::get_if<TimeField>(&params[1])) return UnitOf(*f);
      return std::nullopt;
    case OpKind::kModifyEnum:
      if (auto *e = std::get_if<EnumConst>(&p0)) return UnitOf(e->kind);
      return std::nullopt;
    case OpKind::kCountEnum:
      if (auto *e = std::get_if<EnumConst>(&params[1])) return UnitOf(e->kind);
      return std::nullopt;
    case OpKind::kToBegin:
    case OpKind::kToEnd:
      if (auto *f = std::get_if<TimeField>(&p0)) return UnitOf(*f);
      return std::nullopt;
    case OpKind::kEqual:
    case OpKind::kToNext:
    case OpKind::kToLast:
    case OpKind::kMakeSet:
      if (auto *u = std::get_if<TimeUnit>(&p0)) return *u;
      return std::nullopt;
    case OpKind::kForward:
    case OpKind::kBackward:
    case OpKind::kAdd:
      if (auto *u = std::get_if<TimeUnit>(&params[1])) return *u;
      return std::nullopt;
    case OpKind::kApproxRef:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<int> Operation::NumericParams() const {
  std::vector<int> out;
  std::string_view sig = Signature(kind);
  for (size_t i = 0; i < sig.size(); ++i) {
    if (sig[i] != 'i') continue;
    if (auto *v = std::get_if<int>(&params[i])) out.push_back(*v);
  }
  return out;
}

std::string ToString(const Operation &op) {
  std::string out(OpKindName(op.kind));
  out += '[';
  std::string_view sig = Signature(op.kind);
  for (size_t i = 0; i < sig.size(); ++i) {
    if (i > 0) out += ',';
    out += ParamToString(op.params[i]);
  }
  out += ']';
  return out;
}

std::string ToString(std::span<const Operation> seq) {
  std::string out = "(";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(seq[i]);
  }
  out += ')';
  return out;
}

Operation ParseOperation(std::string_view text) {
  text = Trim(text);
  size_t open = text.find('[');
  if (open == std::string_view::npos || text.back() != ']') {
    throw Error(ErrorCode::kSyntax,
                "bad operation '" + std::string(text) + "'");
  }
  std::string_view name = text.substr(0, open);
  std::optional<OpKind> kind;
  for (size_t i = 0; i < kOpNames.size(); ++i) {
    if (kOpNames[i] == name) kind = static_cast<OpKind>(i);
  }
  if (!kind) {
    throw Error(ErrorCode::kSyntax,
                "unknown operation '" + std::string(name) + "'");
  }
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string_view> parts;
  while (true) {
    size_t comma = body.find(',');
    parts.push_back(Trim(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  std::string_view sig = Signature(*kind);
  if (parts.size() != sig.size()) {
    throw Error(ErrorCode::kSyntax,
                "wrong parameter count in '" + std::string(text) + "'");
  }
  Operation op;
  op.kind = *kind;
  for (size_t i = 0; i < sig.size(); ++i) {
    auto p = ParseParam(parts[i], sig[i]);
    if (!p) {
      throw Error(ErrorCode::kSyntax, "bad parameter '" +
                                          std::string(parts[i]) + "' in '" +
                                          std::string(text) + "'");
    }
    op.params[i] = *p;
  }
  return op;
}

OperationSequence ParseSequence(std::string_view text) {
  text = Trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::kSyntax, "bad sequence '" + std::string(text) + "'");
  }
  text = Trim(text.substr(1, text.size() - 2));
  OperationSequence seq;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view part = Trim(text.substr(start, i - start));
      if (!part.empty()) seq.push_back(ParseOperation(part));
      start = i + 1;
      continue;
    }
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
  }
  return seq;
}

bool CanonicalLess(const Operation &a, const Operation &b) {
  auto key = [](const Operation &op) {
    int group = op.kind == OpKind::kApproxRef  ? 0
                : op.kind == OpKind::kMakeSet ? 2
                                              : 1;
    auto unit = op.Unit();
    int unit_order = unit ? static_cast<int>(*unit) : kNumTimeUnits;
    return std::make_tuple(group, unit_order, ClassRank(op.kind));
  };
  auto ka = key(a);
  auto kb = key(b);
  if (ka != kb) return ka < kb;
  return ToString(a) < ToString(b);
}

OperationSequence SortSequence(OperationSequence ops) {
  std::stable_sort(ops.begin(), ops.end(), CanonicalLess);
  return ops;
}

ErrorCode ApplyOperation(const Operation &op, TemporalValue *value) {
  if (op.HasVariables()) return ErrorCode::kUnresolvedVariable;
  const Param &p0 = op.params[0];
  const Param &p1 = op.params[1];
  if (op.kind == OpKind::kAdd) {
    if (!value->is_duration()) return ErrorCode::kKindMismatch;
    int n = std::get<int>(p0);
    TimeUnit u = std::get<TimeUnit>(p1);
    if (n < 1 || !Duration::Supports(u)) return ErrorCode::kFieldOverflow;
    value->duration()[u] += n;
    return ErrorCode::kOk;
  }
  if (op.kind == OpKind::kApproxRef) {
    *value = TemporalValue(std::get<RefKind>(p0));
    return ErrorCode::kOk;
  }
  if (!value->is_instant()) return ErrorCode::kKindMismatch;
  const Instant &v = value->instant();
  Instant out;
  ErrorCode rc = ErrorCode::kKindMismatch;
  switch (op.kind) {
    case OpKind::kModifyVal:
      rc = ModifyValue(v, std::get<TimeField>(p1), std::get<int>(p0), &out);
      break;
    case OpKind::kModifyEnum:
      rc = ModifyEnumValue(v, std::get<EnumConst>(p0), &out);
      break;
    case OpKind::kCountEnum:
      rc = CountEnumValue(v, std::get<int>(p0), std::get<EnumConst>(p1),
                          std::get<TimeUnit>(op.params[2]), &out);
      break;
    case OpKind::kEqual: {
      auto t = TryTruncate(v, std::get<TimeUnit>(p0));
      if (t) {
        out = *t;
        rc = ErrorCode::kOk;
      }
      break;
    }
    case OpKind::kToBegin:
    case OpKind::kToEnd:
      rc = ToBoundary(v, std::get<TimeField>(p0), op.kind == OpKind::kToBegin,
                      &out);
      break;
    case OpKind::kForward:
    case OpKind::kBackward: {
      int n = std::get<int>(p0);
      if (n < 1) return ErrorCode::kFieldOverflow;
      rc = Shift(v, op.kind == OpKind::kForward ? n : -n,
                 std::get<TimeUnit>(p1), &out);
      break;
    }
    case OpKind::kToNext:
    case OpKind::kToLast: {
      TimeUnit u = std::get<TimeUnit>(p0);
      auto t = TryTruncate(v, u);
      if (!t) return ErrorCode::kKindMismatch;
      rc = Shift(*t, op.kind == OpKind::kToNext ? 1 : -1, u, &out);
      break;
    }
    case OpKind::kMakeSet:
      rc = MakeSetValue(v, std::get<TimeUnit>(p0), &out);
      break;
    default:
      break;
  }
  if (rc == ErrorCode::kOk) *value = TemporalValue(out);
  return rc;
}

ErrorCode TryExecute(std::span<const Operation> seq, const TemporalValue &base,
                     TemporalValue *out) {
  if (seq.empty()) {
    *out = base;
    return ErrorCode::kOk;
  }
  size_t adds = 0;
  size_t refs = 0;
  for (const Operation &op : seq) {
    if (op.kind == OpKind::kAdd) ++adds;
    if (op.kind == OpKind::kApproxRef) ++refs;
  }
  TemporalValue value = base;
  if (adds > 0) {
    if (adds != seq.size()) return ErrorCode::kKindMismatch;
    value = TemporalValue(Duration{});
  } else if (refs > 0) {
    if (refs != seq.size()) return ErrorCode::kKindMismatch;
    for (const Operation &op : seq) {
      if (op.params[0] != seq.front().params[0])
        return ErrorCode::kKindMismatch;
    }
  } else if (!base.is_instant()) {
    return base.is_duration() ? ErrorCode::kEmptySequenceOnDuration
                              : ErrorCode::kKindMismatch;
  }
  for (const Operation &op : seq) {
    ErrorCode rc = ApplyOperation(op, &value);
    if (rc != ErrorCode::kOk) return rc;
  }
  if (!value.IsValid()) return ErrorCode::kKindMismatch;
  *out = value;
  return ErrorCode::kOk;
}

TemporalValue Execute(std::span<const Operation> seq,
                      const TemporalValue &base) {
  TemporalValue out;
  ErrorCode rc = TryExecute(seq, base, &out);
  if (rc != ErrorCode::kOk) {
    throw Error(rc, "cannot execute " + ToString(seq) + " on " +
                        SerializeTimexValue(base));
  }
  return out;
}

bool IsRedundant(std::span<const Operation> seq, const TemporalValue &base) {
  TemporalValue full = Execute(seq, base);
  const size_t n = seq.size();
  if (n < 2) return false;
  OperationSequence sub;
  TemporalValue result;
  for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    sub.clear();
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(seq[i]);
    }
    if (TryExecute(sub, base, &result) == ErrorCode::kOk && result == full)
      return true;
  }
  return false;
}

std::optional<Operation> Resolve(
    const Operation &op, std::span<const std::optional<BoundValue>> bindings) {
  Operation out = op;
  std::string_view sig = Signature(op.kind);
  for (size_t i = 0; i < sig.size(); ++i) {
    const Var *var = std::get_if<Var>(&op.params[i]);
    if (!var) continue;
    if (var->index < 0 || static_cast<size_t>(var->index) >= bindings.size() ||
        !bindings[var->index])
      return std::nullopt;
    const BoundValue &b = *bindings[var->index];
    switch (sig[i]) {
      case 'i':
        if (!std::holds_alternative<int>(b)) return std::nullopt;
        out.params[i] = std::get<int>(b);
        break;
      case 'u':
        if (!std::holds_alternative<TimeUnit>(b)) return std::nullopt;
        out.params[i] = std::get<TimeUnit>(b);
        break;
      case 'e':
        if (!std::holds_alternative<EnumConst>(b)) return std::nullopt;
        out.params[i] = std::get<EnumConst>(b);
        break;
      default:
        return std::nullopt;
    }
  }
  return out;
}

}  // namespace timenorm
