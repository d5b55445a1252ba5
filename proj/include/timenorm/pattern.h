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

// Surface-form patterns: literal tokens mixed with typed variable slots, for
// example "last MONTH:$1" or "NUM:$1 TIME_UNIT:$2 ago".

#ifndef TIMENORM_PATTERN_H_
#define TIMENORM_PATTERN_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "timenorm/lexicon.h"

namespace timenorm {

// Indexed by variable number; entry 0 is unused.
using Bindings = std::vector<std::optional<BoundValue>>;

struct PatternElement {
  bool is_slot = false;
  std::string literal;
  TokenType type = TokenType::kNum;
  int var = 0;

  auto operator<=>(const PatternElement &) const = default;

  bool Accepts(const Token &token) const;
  // Value the token gives this slot.
  std::optional<BoundValue> Extract(const Token &token) const;
};

class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<PatternElement> elements);

  // Parses the space separated textual form. Throws Error(kSyntax) when a
  // slot is malformed or variables are not numbered $1..$n left to right.
  static Pattern Parse(std::string_view text);

  const std::vector<PatternElement> &elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  int num_vars() const { return num_vars_; }
  const std::string &text() const { return text_; }

  // Binding for each variable when the tokens align element-wise with the
  // pattern, otherwise nullopt.
  std::optional<Bindings> Match(std::span<const Token> tokens) const;

  bool operator==(const Pattern &other) const { return text_ == other.text_; }
  auto operator<=>(const Pattern &other) const { return text_ <=> other.text_; }

 private:
  std::vector<PatternElement> elements_;
  int num_vars_ = 0;
  std::string text_;
};

}  // namespace timenorm

#endif  // TIMENORM_PATTERN_H_
