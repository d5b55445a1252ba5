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

// Rules, the rule store and rule learning.
//
// A rule pairs a surface pattern with an operation sequence whose
// parameters may refer to the pattern's slots:
//
//   last MONTH:$1  Instant  (ToLast[year], ModifyEnum[$1])
//
// Learning captures the operation sequences of every training expression,
// abstracts the parameters that are visible in the tokens into slots, and
// keeps the best supported sequence for each pattern.

#ifndef TIMENORM_RULE_H_
#define TIMENORM_RULE_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "timenorm/capture.h"
#include "timenorm/pattern.h"

namespace timenorm {

struct Rule {
  Pattern pattern;
  ValueKind value_type = ValueKind::kInstant;
  OperationSequence operations;
  int support = 0;
  int pattern_support = 0;

  // Operations with variables replaced by the bindings, in canonical order.
  // nullopt when a variable cannot be resolved.
  std::optional<OperationSequence> Resolve(const Bindings &bindings) const;
};

// One rule file line: pattern, type, operations, support, pattern support.
std::string FormatRule(const Rule &rule);
// Throws Error(kBadLine) or Error(kSyntax).
Rule ParseRule(std::string_view line);

class RuleStore {
 public:
  RuleStore() = default;
  // Sorts by (support, pattern support) descending, then pattern text.
  explicit RuleStore(std::vector<Rule> rules);

  const std::vector<Rule> &rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  // Rule for a pattern text, or null.
  const Rule *Find(std::string_view pattern_text) const;

  // Indices, in rank order, of rules whose first element accepts token.
  std::vector<int> Candidates(const Token &token) const;

  void Write(std::ostream &out) const;
  static RuleStore Read(std::istream &in);
  void Save(const std::string &path) const;
  static RuleStore Load(const std::string &path);

 private:
  void BuildIndex();

  std::vector<Rule> rules_;
  std::map<std::string, int, std::less<>> by_pattern_;
  std::map<std::string, std::vector<int>, std::less<>> by_literal_;
  std::map<TokenType, std::vector<int>> by_slot_;
};

// A gold-annotated time expression.
struct AnnotatedExpression {
  std::string doc_id;
  std::string surface;
  std::vector<Token> tokens;
  std::string gold_type;
  std::string gold_value;
  Instant dct;
};

// Candidate rules for one captured sequence: one per consistent way of
// assigning the sequence's parameters to tokens that show them.
std::vector<Rule> AbstractCandidates(const std::vector<Token> &tokens,
                                     const OperationSequence &seq,
                                     ValueKind value_type);

struct LearnStats {
  int expressions = 0;
  int skipped = 0;  // gold value outside the supported grammar
  int captured = 0;
  int no_sequence = 0;
  int budget_exceeded = 0;
  int64_t candidates = 0;  // distinct candidate rules summed per expression

  double MeanCandidates() const {
    return captured == 0 ? 0.0 : static_cast<double>(candidates) / captured;
  }
};

// Throws Error(kEmptyCorpus) when corpus is empty.
RuleStore Learn(const std::vector<AnnotatedExpression> &corpus,
                const CaptureOptions &options = {},
                LearnStats *stats = nullptr);

}  // namespace timenorm

#endif  // TIMENORM_RULE_H_
