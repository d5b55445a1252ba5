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

#include "timenorm/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace timenorm {

namespace {

constexpr std::array<std::string_view, 7> kTypeNames = {
    "MONTH", "WEEK", "SEASON", "DAY_TIME", "TIME_UNIT", "IN_EQ", "NUM"};

constexpr std::array<std::string_view, 20> kUnitWords = {
    "one",     "two",     "three",     "four",     "five",
    "six",     "seven",   "eight",     "nine",     "ten",
    "eleven",  "twelve",  "thirteen",  "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};

constexpr std::array<std::string_view, 20> kUnitOrdinals = {
    "first",       "second",     "third",      "fourth",     "fifth",
    "sixth",       "seventh",    "eighth",     "ninth",      "tenth",
    "eleventh",    "twelfth",    "thirteenth", "fourteenth", "fifteenth",
    "sixteenth",   "seventeenth", "eighteenth", "nineteenth", "twentieth"};

constexpr std::array<std::string_view, 8> kTens = {
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty",
    "ninety"};

constexpr std::array<std::string_view, 8> kTensOrdinals = {
    "twentieth", "thirtieth", "fortieth", "fiftieth", "sixtieth",
    "seventieth", "eightieth", "ninetieth"};

constexpr std::array<std::string_view, 22> kDefaultStopwords = {
    "a",    "an",   "the", "this", "that", "these", "those", "of",
    "in",   "on",   "at",  "to",   "for",  "from",  "by",    "and",
    "or",   ",",    "-",   "\xE2\x80\x93", "/", "."};

struct UnitEntry {
  std::string_view canonical;
  std::vector<std::string_view> variants;
};

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c >= 0x80;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::string_view TokenTypeName(TokenType type) {
  return kTypeNames[static_cast<int>(type)];
}

std::optional<TokenType> ParseTokenType(std::string_view name) {
  for (size_t i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == name) return static_cast<TokenType>(i);
  }
  return std::nullopt;
}

const Tag *Token::FindTag(TokenType type) const {
  for (const Tag &tag : tags) {
    if (tag.type == type) return &tag;
  }
  return nullptr;
}

Lexicon::Lexicon() {
  for (int m = 1; m <= 12; ++m) {
    std::string name = Lower(EnumName({EnumKind::kMonth, m}));
    std::vector<std::string> variants = {name};
    if (name.size() > 3) {
      variants.push_back(name.substr(0, 3));
      variants.push_back(name.substr(0, 3) + ".");
    }
    if (m == 9) variants.insert(variants.end(), {"sept", "sept."});
    AddEntry(TokenType::kMonth, EnumName({EnumKind::kMonth, m}), variants);
  }
  for (int d = 1; d <= 7; ++d) {
    std::string name = Lower(EnumName({EnumKind::kWeekday, d}));
    std::string abbr = name.substr(0, 3);
    std::vector<std::string> variants = {name, name + "s", abbr, abbr + "."};
    if (d == 2) variants.insert(variants.end(), {"tues", "tues."});
    if (d == 4) {
      variants.insert(variants.end(), {"thur", "thur.", "thurs", "thurs."});
    }
    AddEntry(TokenType::kWeek, EnumName({EnumKind::kWeekday, d}), variants);
  }
  AddEntry(TokenType::kSeason, "Spring", {"spring", "springs"});
  AddEntry(TokenType::kSeason, "Summer", {"summer", "summers"});
  AddEntry(TokenType::kSeason, "Fall", {"fall", "autumn", "autumns"});
  AddEntry(TokenType::kSeason, "Winter", {"winter", "winters"});
  AddEntry(TokenType::kDayTime, "Morning", {"morning", "mornings"});
  AddEntry(TokenType::kDayTime, "Afternoon", {"afternoon", "afternoons"});
  AddEntry(TokenType::kDayTime, "Evening", {"evening", "evenings"});
  AddEntry(TokenType::kDayTime, "Night", {"night", "nights", "tonight"});
  AddEntry(TokenType::kDayTime, "Noon", {"noon", "midday"});
  AddEntry(TokenType::kDayTime, "Midnight", {"midnight"});

  const std::vector<UnitEntry> units = {
      {"second", {"second", "seconds", "sec", "secs"}},
      {"minute", {"minute", "minutes", "min", "mins"}},
      {"hour", {"hour", "hours", "hr", "hrs"}},
      {"day", {"day", "days"}},
      {"week", {"week", "weeks", "wk", "wks"}},
      {"weekend", {"weekend", "weekends"}},
      {"month", {"month", "months", "mo", "mos"}},
      {"quarter", {"quarter", "quarters"}},
      {"season", {"season", "seasons"}},
      {"year", {"year", "years", "yr", "yrs"}},
      {"decade", {"decade", "decades"}},
      {"century", {"century", "centuries"}},
  };
  for (const UnitEntry &u : units) {
    std::vector<std::string> variants(u.variants.begin(), u.variants.end());
    AddEntry(TokenType::kTimeUnit, u.canonical, variants);
  }

  for (std::string_view phrase :
       {"a mere", "no more than", "at least", "at most", "up to", "more than",
        "less than", "nearly", "about", "around", "almost", "over"}) {
    AddEntry(TokenType::kInEq, phrase, {std::string(phrase)});
  }

  for (size_t i = 0; i < kUnitWords.size(); ++i) {
    cardinals_[std::string(kUnitWords[i])] = static_cast<int>(i) + 1;
    ordinals_[std::string(kUnitOrdinals[i])] = static_cast<int>(i) + 1;
  }
  for (size_t t = 0; t < kTens.size(); ++t) {
    int tens = 20 + 10 * static_cast<int>(t);
    cardinals_[std::string(kTens[t])] = tens;
    ordinals_[std::string(kTensOrdinals[t])] = tens;
    for (int u = 1; u <= 9; ++u) {
      std::string stem = std::string(kTens[t]) + "-";
      cardinals_[stem + std::string(kUnitWords[u - 1])] = tens + u;
      ordinals_[stem + std::string(kUnitOrdinals[u - 1])] = tens + u;
    }
  }

  for (std::string_view w : kDefaultStopwords) {
    stopwords_.emplace(w);
  }
}

const Lexicon &Lexicon::Default() {
  static const Lexicon *lexicon = new Lexicon();
  return *lexicon;
}

void Lexicon::AddWord(const std::string &surface, Tag tag) {
  std::vector<Tag> &tags = words_[surface];
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
    tags.push_back(tag);
  }
}

void Lexicon::AddEntry(TokenType type, std::string_view canonical,
                       const std::vector<std::string> &variants) {
  Tag tag{type, std::nullopt};
  switch (type) {
    case TokenType::kMonth:
    case TokenType::kWeek:
    case TokenType::kSeason:
    case TokenType::kDayTime: {
      auto e = ParseEnum(canonical);
      static constexpr EnumKind kKinds[] = {EnumKind::kMonth, EnumKind::kWeekday,
                                            EnumKind::kSeason,
                                            EnumKind::kDayTime};
      if (!e || e->kind != kKinds[static_cast<int>(type)]) {
        throw Error(ErrorCode::kBadLine,
                    "unknown constant '" + std::string(canonical) + "'");
      }
      tag.value = *e;
      break;
    }
    case TokenType::kTimeUnit:
      // Units without a value (weekend) are still tagged.
      if (auto u = ParseUnit(canonical)) tag.value = *u;
      break;
    case TokenType::kInEq:
      break;
    case TokenType::kNum:
      throw Error(ErrorCode::kBadLine, "NUM is not a lexicon type");
  }
  for (const std::string &variant : variants) {
    std::string v = Lower(variant);
    if (v.empty()) continue;
    if (v.find(' ') != std::string::npos) {
      phrases_.push_back(Split(v, ' '));
    } else {
      AddWord(v, tag);
    }
  }
}

void Lexicon::LoadEntries(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = Split(line, '\t');
    auto type = cols.size() == 3 ? ParseTokenType(cols[0]) : std::nullopt;
    if (!type) {
      throw Error(ErrorCode::kBadLine,
                  path + ":" + std::to_string(line_no) + ": bad entry");
    }
    AddEntry(*type, cols[1], Split(cols[2], '|'));
  }
}

void Lexicon::LoadStopwords(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  stopwords_.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) stopwords_.insert(Lower(line));
  }
}

bool Lexicon::IsStopword(std::string_view surface) const {
  return stopwords_.find(surface) != stopwords_.end();
}

std::vector<Token> Lexicon::Tokenize(std::string_view text) const {
  std::string s = Lower(text);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token tok;
    // En and em dashes are punctuation even though they are multibyte.
    if (s.compare(i, 3, "\xE2\x80\x93") == 0 ||
        s.compare(i, 3, "\xE2\x80\x94") == 0) {
      tok.surface = s.substr(i, 3);
      tok.kind = TokenKind::kPunct;
      i += 3;
    } else if (IsWordByte(c)) {
      size_t j = i;
      while (j < s.size() && IsWordByte(s[j]) &&
             s.compare(j, 3, "\xE2\x80\x93") != 0 &&
             s.compare(j, 3, "\xE2\x80\x94") != 0) {
        ++j;
      }
      tok.surface = s.substr(i, j - i);
      // Keep the period of a known abbreviation.
      if (j < s.size() && s[j] == '.' && words_.count(tok.surface + ".")) {
        tok.surface += '.';
        ++j;
      }
      // Join hyphenated number words such as "twenty-one".
      if (j < s.size() && s[j] == '-') {
        size_t k = j + 1;
        while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) {
          ++k;
        }
        std::string joined = tok.surface + s.substr(j, k - j);
        if (cardinals_.count(joined) || ordinals_.count(joined)) {
          tok.surface = joined;
          j = k;
        }
      }
      i = j;
    } else {
      tok.surface = std::string(1, static_cast<char>(c));
      tok.kind = TokenKind::kPunct;
      ++i;
    }
    tokens.push_back(std::move(tok));
  }
  TagTokens(&tokens);
  return tokens;
}

void Lexicon::TagTokens(std::vector<Token> *tokens) const {
  for (Token &tok : *tokens) {
    if (tok.kind == TokenKind::kPunct) continue;
    const std::string &w = tok.surface;
    if (AllDigits(w) && w.size() <= 9) {
      tok.kind = TokenKind::kNumber;
      tok.number = std::stoi(w);
      tok.style = NumberStyle::kDigits;
    } else if (auto it = cardinals_.find(w); it != cardinals_.end()) {
      tok.kind = TokenKind::kNumber;
      tok.number = it->second;
      tok.style = NumberStyle::kCardinal;
    } else if (auto it = ordinals_.find(w); it != ordinals_.end()) {
      tok.kind = TokenKind::kNumber;
      tok.number = it->second;
      tok.style = NumberStyle::kOrdinal;
    } else if (w.size() >= 3 && w.size() <= 6 &&
               AllDigits(w.substr(0, w.size() - 2))) {
      std::string_view suffix = std::string_view(w).substr(w.size() - 2);
      if (suffix == "st" || suffix == "nd" || suffix == "rd" ||
          suffix == "th") {
        tok.kind = TokenKind::kNumber;
        tok.number = std::stoi(w.substr(0, w.size() - 2));
        tok.style = NumberStyle::kOrdinal;
      }
    }
    if (auto it = words_.find(w); it != words_.end()) tok.tags = it->second;
  }
  for (size_t i = 0; i + 1 < tokens->size(); ++i) {
    Token &tok = (*tokens)[i];
    if ((tok.surface == "a" || tok.surface == "an") &&
        (*tokens)[i + 1].FindTag(TokenType::kTimeUnit)) {
      tok.kind = TokenKind::kNumber;
      tok.number = 1;
      tok.style = NumberStyle::kCardinal;
    }
  }
  for (const std::vector<std::string> &phrase : phrases_) {
    for (size_t i = 0; i + phrase.size() <= tokens->size(); ++i) {
      bool match = true;
      for (size_t k = 0; k < phrase.size() && match; ++k) {
        match = (*tokens)[i + k].surface == phrase[k];
      }
      if (!match) continue;
      for (size_t k = 0; k < phrase.size(); ++k) {
        Token &tok = (*tokens)[i + k];
        if (!tok.FindTag(TokenType::kInEq)) {
          tok.tags.push_back({TokenType::kInEq, std::nullopt});
        }
      }
    }
  }
}

std::vector<int> NumVals(const std::vector<Token> &tokens) {
  std::vector<int> out;
  for (const Token &tok : tokens) {
    if (tok.IsNumber()) out.push_back(tok.number);
  }
  return out;
}

std::string JoinSurfaces(const std::vector<Token> &tokens) {
  std::string out;
  for (const Token &tok : tokens) {
    if (!out.empty()) out += ' ';
    out += tok.surface;
  }
  return out;
}

}  // namespace timenorm
