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

// Tokenizer and token-type lexicon for time expressions.

#ifndef TIMENORM_LEXICON_H_
#define TIMENORM_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "timenorm/operation.h"

namespace timenorm {

// NUM is not a lexicon type; it is the slot type for numeric tokens.
enum class TokenType : uint8_t {
  kMonth,
  kWeek,
  kSeason,
  kDayTime,
  kTimeUnit,
  kInEq,
  kNum,
};

std::string_view TokenTypeName(TokenType type);
std::optional<TokenType> ParseTokenType(std::string_view name);

enum class TokenKind : uint8_t { kWord, kNumber, kPunct };
enum class NumberStyle : uint8_t { kCardinal, kOrdinal, kDigits };

struct Tag {
  TokenType type;
  // Unset for IN_EQ phrases and for time-unit words with no unit value
  // ("weekend").
  std::optional<BoundValue> value;

  bool operator==(const Tag &) const = default;
};

struct Token {
  std::string surface;  // lower case
  TokenKind kind = TokenKind::kWord;
  int number = 0;  // valid when kind == kNumber
  NumberStyle style = NumberStyle::kDigits;
  std::vector<Tag> tags;

  bool IsNumber() const { return kind == TokenKind::kNumber; }
  const Tag *FindTag(TokenType type) const;
  bool operator==(const Token &) const = default;
};

class Lexicon {
 public:
  // Built-in entries and stop words.
  Lexicon();

  // Shared instance with the built-in entries.
  static const Lexicon &Default();

  // Adds entries from a file of "TYPE<TAB>canonical<TAB>v1|v2|..." lines.
  // Throws Error(kIo) or Error(kBadLine).
  void LoadEntries(const std::string &path);
  // Replaces the stop-word list with the lines of a file.
  void LoadStopwords(const std::string &path);

  void AddEntry(TokenType type, std::string_view canonical,
                const std::vector<std::string> &variants);

  std::vector<Token> Tokenize(std::string_view text) const;

  bool IsStopword(const Token &token) const {
    return IsStopword(token.surface);
  }
  bool IsStopword(std::string_view surface) const;
  const std::set<std::string, std::less<>> &stopwords() const {
    return stopwords_;
  }

 private:
  void AddWord(const std::string &surface, Tag tag);
  void TagTokens(std::vector<Token> *tokens) const;

  std::map<std::string, std::vector<Tag>, std::less<>> words_;
  // Multiword IN_EQ phrases, as word lists.
  std::vector<std::vector<std::string>> phrases_;
  std::map<std::string, int, std::less<>> cardinals_;
  std::map<std::string, int, std::less<>> ordinals_;
  std::set<std::string, std::less<>> stopwords_;
};

// Integers denoted by the tokens, in order.
std::vector<int> NumVals(const std::vector<Token> &tokens);

// Space-joined surfaces.
std::string JoinSurfaces(const std::vector<Token> &tokens);

}  // namespace timenorm

#endif  // TIMENORM_LEXICON_H_
