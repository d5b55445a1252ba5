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

#include "timenorm/pattern.h"

#include <charconv>

namespace timenorm {

bool PatternElement::Accepts(const Token &token) const {
  if (!is_slot) return token.surface == literal;
  return Extract(token).has_value();
}

std::optional<BoundValue> PatternElement::Extract(const Token &token) const {
  if (!is_slot) return std::nullopt;
  if (type == TokenType::kNum) {
    if (!token.IsNumber()) return std::nullopt;
    return BoundValue(token.number);
  }
  const Tag *tag = token.FindTag(type);
  if (tag == nullptr) return std::nullopt;
  return tag->value;
}

Pattern::Pattern(std::vector<PatternElement> elements)
    : elements_(std::move(elements)) {
  for (const PatternElement &e : elements_) {
    if (!text_.empty()) text_ += ' ';
    if (e.is_slot) {
      text_ += TokenTypeName(e.type);
      text_ += ":$" + std::to_string(e.var);
      num_vars_ = std::max(num_vars_, e.var);
    } else {
      text_ += e.literal;
    }
  }
}

Pattern Pattern::Parse(std::string_view text) {
  std::vector<PatternElement> elements;
  int next_var = 1;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    size_t j = text.find(' ', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view word = text.substr(i, j - i);
    i = j;
    PatternElement e;
    size_t colon = word.find(":$");
    auto type = colon == std::string_view::npos
                    ? std::nullopt
                    : ParseTokenType(word.substr(0, colon));
    if (colon != std::string_view::npos && !type) {
      throw Error(ErrorCode::kSyntax,
                  "unknown slot type '" + std::string(word) + "' in pattern");
    }
    if (type) {
      int var = 0;
      std::string_view digits = word.substr(colon + 2);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), var);
      if (ec != std::errc() || ptr != digits.data() + digits.size() ||
          var != next_var) {
        throw Error(ErrorCode::kSyntax,
                    "bad slot '" + std::string(word) + "' in pattern");
      }
      ++next_var;
      e.is_slot = true;
      e.type = *type;
      e.var = var;
    } else {
      e.literal = std::string(word);
    }
    elements.push_back(std::move(e));
  }
  return Pattern(std::move(elements));
}

std::optional<Bindings> Pattern::Match(std::span<const Token> tokens) const {
  if (tokens.size() != elements_.size()) return std::nullopt;
  Bindings bindings(num_vars_ + 1);
  for (size_t i = 0; i < elements_.size(); ++i) {
    const PatternElement &e = elements_[i];
    if (!e.is_slot) {
      if (tokens[i].surface != e.literal) return std::nullopt;
      continue;
    }
    auto value = e.Extract(tokens[i]);
    if (!value) return std::nullopt;
    bindings[e.var] = *value;
  }
  return bindings;
}

}  // namespace timenorm
