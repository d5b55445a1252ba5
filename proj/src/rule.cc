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

#include "timenorm/rule.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <unordered_map>

namespace timenorm {

namespace {

// Limit on the number of token assignments tried for one sequence.
constexpr size_t kMaxAssignments = 64;

TokenType SlotTypeOf(EnumKind kind) {
  switch (kind) {
    case EnumKind::kMonth: return TokenType::kMonth;
    case EnumKind::kWeekday: return TokenType::kWeek;
    case EnumKind::kSeason: return TokenType::kSeason;
    case EnumKind::kDayTime: return TokenType::kDayTime;
  }
  return TokenType::kNum;
}

TokenType SlotTypeOf(const BoundValue &value) {
  if (std::holds_alternative<int>(value)) return TokenType::kNum;
  if (std::holds_alternative<TimeUnit>(value)) return TokenType::kTimeUnit;
  return SlotTypeOf(std::get<EnumConst>(value).kind);
}

std::optional<BoundValue> AbstractableValue(const Param &p) {
  if (auto *v = std::get_if<int>(&p)) return BoundValue(*v);
  if (auto *u = std::get_if<TimeUnit>(&p)) return BoundValue(*u);
  if (auto *e = std::get_if<EnumConst>(&p)) return BoundValue(*e);
  return std::nullopt;
}

bool Surfaces(const Token &token, const BoundValue &value) {
  if (auto *v = std::get_if<int>(&value)) {
    return token.IsNumber() && token.number == *v;
  }
  const Tag *tag = token.FindTag(SlotTypeOf(value));
  return tag != nullptr && tag->value == value;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    cols.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cols;
}

int ParseCount(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
    throw Error(ErrorCode::kBadLine, "bad count '" + std::string(text) + "'");
  }
  return v;
}

std::string RuleKey(const Rule &rule) {
  std::string key = rule.pattern.text();
  key += '\t';
  key += ValueKindName(rule.value_type);
  key += '\t';
  key += ToString(rule.operations);
  return key;
}

bool RankBefore(const Rule &a, const Rule &b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.pattern_support != b.pattern_support) {
    return a.pattern_support > b.pattern_support;
  }
  if (a.pattern.text() != b.pattern.text()) {
    return a.pattern.text() < b.pattern.text();
  }
  return ToString(a.operations) < ToString(b.operations);
}

}  // namespace

std::optional<OperationSequence> Rule::Resolve(const Bindings &bindings) const {
  OperationSequence out;
  out.reserve(operations.size());
  for (const Operation &op : operations) {
    auto resolved = timenorm::Resolve(op, bindings);
    if (!resolved) return std::nullopt;
    out.push_back(*resolved);
  }
  return SortSequence(std::move(out));
}

std::string FormatRule(const Rule &rule) {
  std::string line = rule.pattern.text();
  line += '\t';
  line += ValueKindName(rule.value_type);
  line += '\t';
  line += ToString(rule.operations);
  line += '\t' + std::to_string(rule.support);
  line += '\t' + std::to_string(rule.pattern_support);
  return line;
}

Rule ParseRule(std::string_view line) {
  std::vector<std::string_view> cols = SplitTabs(line);
  if (cols.size() != 5) {
    throw Error(ErrorCode::kBadLine, "expected 5 columns in rule line");
  }
  Rule rule;
  rule.pattern = Pattern::Parse(cols[0]);
  auto kind = ParseValueKind(cols[1]);
  if (!kind) {
    throw Error(ErrorCode::kBadLine,
                "unknown value type '" + std::string(cols[1]) + "'");
  }
  rule.value_type = *kind;
  rule.operations = ParseSequence(cols[2]);
  rule.support = ParseCount(cols[3]);
  rule.pattern_support = ParseCount(cols[4]);
  return rule;
}

RuleStore::RuleStore(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::stable_sort(rules_.begin(), rules_.end(), RankBefore);
  BuildIndex();
}

void RuleStore::BuildIndex() {
  for (int i = 0; i < static_cast<int>(rules_.size()); ++i) {
    const Rule &rule = rules_[i];
    by_pattern_.emplace(rule.pattern.text(), i);
    if (rule.pattern.size() == 0) continue;
    const PatternElement &first = rule.pattern.elements()[0];
    if (first.is_slot) {
      by_slot_[first.type].push_back(i);
    } else {
      by_literal_[first.literal].push_back(i);
    }
  }
}

const Rule *RuleStore::Find(std::string_view pattern_text) const {
  auto it = by_pattern_.find(pattern_text);
  return it == by_pattern_.end() ? nullptr : &rules_[it->second];
}

std::vector<int> RuleStore::Candidates(const Token &token) const {
  std::vector<int> out;
  if (auto it = by_literal_.find(token.surface); it != by_literal_.end()) {
    out = it->second;
  }
  for (const auto &[type, indices] : by_slot_) {
    bool accepts = type == TokenType::kNum ? token.IsNumber()
                                           : token.FindTag(type) != nullptr;
    if (accepts) out.insert(out.end(), indices.begin(), indices.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void RuleStore::Write(std::ostream &out) const {
  for (const Rule &rule : rules_) out << FormatRule(rule) << '\n';
}

RuleStore RuleStore::Read(std::istream &in) {
  std::vector<Rule> rules;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      rules.push_back(ParseRule(line));
    } catch (const Error &e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " +
                                e.what());
    }
  }
  return RuleStore(std::move(rules));
}

void RuleStore::Save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  Write(out);
}

RuleStore RuleStore::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  return Read(in);
}

std::vector<Rule> AbstractCandidates(const std::vector<Token> &tokens,
                                     const OperationSequence &seq,
                                     ValueKind value_type) {
  // Distinct abstractable parameter values, in order of first use.
  std::vector<BoundValue> values;
  for (const Operation &op : seq) {
    for (const Param &p : op.params) {
      auto v = AbstractableValue(p);
      if (v && std::find(values.begin(), values.end(), *v) == values.end()) {
        values.push_back(*v);
      }
    }
  }
  std::vector<std::vector<int>> options(values.size());
  for (size_t k = 0; k < values.size(); ++k) {
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      if (Surfaces(tokens[i], values[k])) options[k].push_back(i);
    }
    // A value that no token shows stays concrete.
    if (options[k].empty()) options[k].push_back(-1);
  }

  // Enumerate assignments value -> token, one token per value.
  std::vector<std::vector<int>> assignments;
  std::vector<int> current(values.size());
  std::vector<bool> used(tokens.size());
  auto enumerate = [&](auto &&self, size_t k) -> void {
    if (assignments.size() >= kMaxAssignments) return;
    if (k == values.size()) {
      assignments.push_back(current);
      return;
    }
    for (int i : options[k]) {
      if (i >= 0 && used[i]) continue;
      current[k] = i;
      if (i >= 0) used[i] = true;
      self(self, k + 1);
      if (i >= 0) used[i] = false;
    }
  };
  enumerate(enumerate, 0);

  std::vector<Rule> out;
  for (const std::vector<int> &assignment : assignments) {
    // Variables are numbered by token position.
    std::vector<int> slot_of_token(tokens.size(), -1);
    for (size_t k = 0; k < values.size(); ++k) {
      if (assignment[k] >= 0) slot_of_token[assignment[k]] = static_cast<int>(k);
    }
    std::vector<int> var_of_value(values.size(), 0);
    std::vector<PatternElement> elements;
    int next_var = 1;
    for (size_t i = 0; i < tokens.size(); ++i) {
      PatternElement e;
      if (slot_of_token[i] >= 0) {
        int k = slot_of_token[i];
        e.is_slot = true;
        e.type = SlotTypeOf(values[k]);
        e.var = next_var;
        var_of_value[k] = next_var++;
      } else {
        e.literal = tokens[i].surface;
      }
      elements.push_back(std::move(e));
    }
    Rule rule;
    rule.pattern = Pattern(std::move(elements));
    rule.value_type = value_type;
    rule.operations = seq;
    for (Operation &op : rule.operations) {
      for (Param &p : op.params) {
        auto v = AbstractableValue(p);
        if (!v) continue;
        size_t k = std::find(values.begin(), values.end(), *v) - values.begin();
        if (var_of_value[k] > 0) p = Var{var_of_value[k]};
      }
    }
    out.push_back(std::move(rule));
  }
  return out;
}

RuleStore Learn(const std::vector<AnnotatedExpression> &corpus,
                const CaptureOptions &options, LearnStats *stats) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no expressions");
  LearnStats local;
  LearnStats &st = stats ? *stats : local;
  st = LearnStats{};

  std::map<std::string, Rule> aggregated;
  std::vector<const AnnotatedExpression *> usable;
  for (const AnnotatedExpression &expr : corpus) {
    ++st.expressions;
    auto gold = TryParseTimexValue(expr.gold_value);
    if (!gold || expr.tokens.empty()) {
      ++st.skipped;
      continue;
    }
    usable.push_back(&expr);
    CaptureTask task{TemporalValue(expr.dct), *gold, NumVals(expr.tokens)};
    CaptureResult result = Capture(task, options);
    if (result.status == CaptureStatus::kBudgetExceeded) ++st.budget_exceeded;

    std::set<std::string> keys;
    for (const OperationSequence &seq : result.sequences) {
      if (seq.empty()) continue;
      for (Rule &rule : AbstractCandidates(expr.tokens, seq, gold->kind())) {
        std::string key = RuleKey(rule);
        if (!keys.insert(key).second) continue;
        auto [it, inserted] = aggregated.try_emplace(key, std::move(rule));
        ++it->second.support;
      }
    }
    if (keys.empty()) {
      ++st.no_sequence;
    } else {
      ++st.captured;
      st.candidates += static_cast<int64_t>(keys.size());
    }
  }

  // Keep the best supported rule for each pattern.
  std::map<std::string, Rule> best;
  for (auto &[key, rule] : aggregated) {
    auto it = best.find(rule.pattern.text());
    if (it == best.end()) {
      best.emplace(rule.pattern.text(), rule);
      continue;
    }
    const Rule &cur = it->second;
    bool better = rule.support != cur.support
                      ? rule.support > cur.support
                  : rule.operations.size() != cur.operations.size()
                      ? rule.operations.size() < cur.operations.size()
                      : ToString(rule.operations) < ToString(cur.operations);
    if (better) it->second = rule;
  }

  // Pattern support: training expressions the pattern matches.
  std::unordered_map<size_t, std::vector<const AnnotatedExpression *>> by_len;
  for (const AnnotatedExpression *expr : usable) {
    by_len[expr->tokens.size()].push_back(expr);
  }
  std::vector<Rule> rules;
  rules.reserve(best.size());
  for (auto &[text, rule] : best) {
    for (const AnnotatedExpression *expr : by_len[rule.pattern.size()]) {
      if (rule.pattern.Match(expr->tokens)) ++rule.pattern_support;
    }
    rules.push_back(std::move(rule));
  }
  return RuleStore(std::move(rules));
}

}  // namespace timenorm
