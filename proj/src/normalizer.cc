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

#include "timenorm/normalizer.h"

#include <algorithm>
#include <functional>

namespace timenorm {

namespace {

struct CoverKey {
  size_t size;
  std::vector<int> supports;  // descending
  std::vector<int> starts;
  std::vector<int> rules;
};

CoverKey KeyOf(const std::vector<Segment> &cover, const RuleStore &store) {
  CoverKey key;
  key.size = cover.size();
  for (const Segment &s : cover) {
    key.supports.push_back(store.rules()[s.rule].support);
    key.starts.push_back(s.begin);
    key.rules.push_back(s.rule);
  }
  std::sort(key.supports.begin(), key.supports.end(), std::greater<>());
  return key;
}

bool Better(const CoverKey &a, const CoverKey &b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.supports != b.supports) return a.supports > b.supports;
  if (a.starts != b.starts) return a.starts < b.starts;
  return a.rules < b.rules;
}

bool HasTimeSlot(const Instant &v) {
  for (int i = 0; i < v.size(); ++i) {
    TimeField f = v[i].field;
    if (f == TimeField::kDayTimeOfDay || f == TimeField::kHourOfDay ||
        f == TimeField::kMinuteOfHour) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view ViaName(Via via) {
  switch (via) {
    case Via::kDirect: return "direct";
    case Via::kSegmented: return "segmented";
    case Via::kFailed: return "failed";
  }
  return "";
}

std::string TimexType(const TemporalValue &value) {
  switch (value.kind()) {
    case ValueKind::kDuration:
      return "DURATION";
    case ValueKind::kApproxRef:
      return "DATE";
    case ValueKind::kInstant:
      if (value.instant().HasGeneric()) return "SET";
      return HasTimeSlot(value.instant()) ? "TIME" : "DATE";
  }
  return "DATE";
}

std::vector<Segment> SegmentTokens(const std::vector<Token> &tokens,
                                   const RuleStore &store,
                                   const Lexicon &lexicon,
                                   const std::vector<bool> &use) {
  const int n = static_cast<int>(tokens.size());
  std::vector<std::optional<std::vector<Segment>>> best(n + 1);
  std::vector<std::optional<CoverKey>> keys(n + 1);
  best[0].emplace();
  keys[0] = KeyOf({}, store);

  auto offer = [&](int i, std::vector<Segment> cover) {
    CoverKey key = KeyOf(cover, store);
    if (!best[i] || Better(key, *keys[i])) {
      best[i] = std::move(cover);
      keys[i] = std::move(key);
    }
  };

  for (int i = 1; i <= n; ++i) {
    // A stop word is skipped only when the prefix before it is covered.
    if (best[i - 1] && lexicon.IsStopword(tokens[i - 1])) {
      offer(i, *best[i - 1]);
    }
    for (int j = 0; j < i; ++j) {
      if (!best[j]) continue;
      std::span<const Token> span(tokens.data() + j, i - j);
      for (int r : store.Candidates(tokens[j])) {
        if (!use[r]) continue;
        const Rule &rule = store.rules()[r];
        if (rule.pattern.size() != span.size()) continue;
        auto bindings = rule.pattern.Match(span);
        if (!bindings) continue;
        std::vector<Segment> cover = *best[j];
        cover.push_back({r, j, i, std::move(*bindings)});
        offer(i, std::move(cover));
      }
    }
  }
  if (!best[n] || best[n]->empty()) return {};
  return *best[n];
}

OperationSequence MergeSegments(const std::vector<Segment> &segments,
                                const RuleStore &store) {
  OperationSequence ops;
  std::optional<ValueKind> kind;
  for (const Segment &s : segments) {
    const Rule &rule = store.rules()[s.rule];
    if (kind && *kind != rule.value_type) {
      throw Error(ErrorCode::kKindConflict,
                  "rules disagree on the value kind");
    }
    kind = rule.value_type;
    auto resolved = rule.Resolve(s.bindings);
    if (!resolved) {
      throw Error(ErrorCode::kUnresolvedVariable,
                  "cannot bind " + rule.pattern.text());
    }
    ops.insert(ops.end(), resolved->begin(), resolved->end());
  }
  ops = SortSequence(std::move(ops));
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  return ops;
}

NormalizationResult Normalize(const std::vector<Token> &tokens,
                              const Instant &dct, const RuleStore &store,
                              const Lexicon &lexicon) {
  NormalizationResult result;
  if (tokens.empty() || store.empty()) return result;
  bool exec_failed = false;
  const TemporalValue base(dct);

  // Direct match, in rank order, falling through on execution failures.
  for (int r : store.Candidates(tokens[0])) {
    const Rule &rule = store.rules()[r];
    if (rule.pattern.size() != tokens.size()) continue;
    auto bindings = rule.pattern.Match(tokens);
    if (!bindings) continue;
    auto ops = rule.Resolve(*bindings);
    TemporalValue out;
    if (ops && TryExecute(*ops, base, &out) == ErrorCode::kOk) {
      result.via = Via::kDirect;
      result.timex_type = TimexType(out);
      result.value = SerializeTimexValue(out);
      result.segments = {{r, 0, static_cast<int>(tokens.size()), *bindings}};
      return result;
    }
    exec_failed = true;
  }

  // Segmentation, one value kind at a time so covers never mix kinds.
  std::vector<std::vector<Segment>> covers;
  for (ValueKind kind :
       {ValueKind::kInstant, ValueKind::kDuration, ValueKind::kApproxRef}) {
    std::vector<bool> use(store.size());
    for (size_t r = 0; r < store.size(); ++r) {
      use[r] = store.rules()[r].value_type == kind;
    }
    auto cover = SegmentTokens(tokens, store, lexicon, use);
    if (!cover.empty()) covers.push_back(std::move(cover));
  }
  std::sort(covers.begin(), covers.end(),
            [&](const auto &a, const auto &b) {
              return Better(KeyOf(a, store), KeyOf(b, store));
            });
  for (const std::vector<Segment> &cover : covers) {
    TemporalValue out;
    try {
      OperationSequence ops = MergeSegments(cover, store);
      if (TryExecute(ops, base, &out) != ErrorCode::kOk) {
        exec_failed = true;
        continue;
      }
    } catch (const Error &) {
      exec_failed = true;
      continue;
    }
    result.via = Via::kSegmented;
    result.timex_type = TimexType(out);
    result.value = SerializeTimexValue(out);
    result.segments = cover;
    return result;
  }
  result.exec_failed = exec_failed;
  return result;
}

}  // namespace timenorm
