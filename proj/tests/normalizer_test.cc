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


#include "doctest.h"
#include "oracles.h"
#include "timenorm/normalizer.h"

using namespace timenorm;

namespace {

Rule MakeRule(std::string_view pattern, std::string_view ops, int support,
              ValueKind kind = ValueKind::kInstant) {
  Rule r;
  r.pattern = Pattern::Parse(pattern);
  r.value_type = kind;
  r.operations = ParseSequence(ops);
  r.support = support;
  r.pattern_support = support;
  return r;
}

std::vector<Token> Tok(std::string_view text) {
  return Lexicon::Default().Tokenize(text);
}

NormalizationResult Norm(std::string_view text, std::string_view dct,
                         const RuleStore &store) {
  return Normalize(Tok(text), *ParseDct(dct), store);
}

std::vector<bool> All(const RuleStore &store) {
  return std::vector<bool>(store.size(), true);
}

}  // namespace

TEST_CASE("direct match") {
  RuleStore store({MakeRule("last MONTH:$1", "(ToLast[year], ModifyEnum[$1])", 3),
                   MakeRule("this TIME_UNIT:$1", "(Equal[$1])", 5)});
  NormalizationResult r = Norm("last october", "2021-05-17", store);
  CHECK(r.via == Via::kDirect);
  CHECK(r.timex_type == "DATE");
  CHECK(r.value == "2020-10");
  NormalizationResult m = Norm("this month", "2021-05-17", store);
  CHECK(m.value == "2021-05");
  NormalizationResult f = Norm("zzz unknown", "2021-05-17", store);
  CHECK(f.via == Via::kFailed);
  CHECK(!f.exec_failed);
}

TEST_CASE("direct match falls through failing rules") {
  RuleStore store({MakeRule("NUM:$1", "(ModifyVal[$1,dayOfMonth])", 9),
                   MakeRule("NUM:$1", "(ModifyVal[$1,year])", 2)});
  // Two rules cannot share a pattern in a learned store, but a hand-made
  // one may; the higher ranked rule fails on 2014 as a day.
  NormalizationResult r = Norm("2014", "2021-05-17", store);
  CHECK(r.via == Via::kDirect);
  CHECK(r.value == "2014");
  CHECK(r.exec_failed == false);
  NormalizationResult bad = Norm("0", "2021-05-17", store);
  CHECK(bad.via == Via::kFailed);
  CHECK(bad.exec_failed);
}

TEST_CASE("segmentation") {
  RuleStore store({MakeRule("MONTH:$1", "(ModifyEnum[$1])", 9),
                   MakeRule("NUM:$1", "(ModifyVal[$1,year])", 4)});
  auto tokens = Tok("in october 2014");
  auto cover = SegmentTokens(tokens, store, Lexicon::Default(), All(store));
  REQUIRE(cover.size() == 2);
  CHECK(cover[0].begin == 1);
  CHECK(cover[1].begin == 2);
  CHECK(oracle::MinCover(tokens, store, Lexicon::Default()) == 2);
  NormalizationResult r = Norm("in october 2014", "2021-05-17", store);
  CHECK(r.via == Via::kSegmented);
  CHECK(r.value == "2014-10");

  auto dash = Tok("october -");
  auto single = SegmentTokens(dash, store, Lexicon::Default(), All(store));
  REQUIRE(single.size() == 1);
  CHECK(single[0].end == 1);

  // The empty prefix counts as covered, so a leading stop word is skipped.
  CHECK(SegmentTokens(Tok("- october"), store, Lexicon::Default(), All(store))
            .size() == 1);
  CHECK(SegmentTokens(Tok("in"), store, Lexicon::Default(), All(store)).empty());
}

TEST_CASE("segmentation prefers fewer and better supported rules") {
  RuleStore store({MakeRule("MONTH:$1 NUM:$2",
                            "(ModifyVal[$2,year], ModifyEnum[$1])", 2),
                   MakeRule("MONTH:$1", "(ModifyEnum[$1])", 9),
                   MakeRule("NUM:$1", "(ModifyVal[$1,dayOfMonth])", 7),
                   MakeRule("NUM:$1", "(ModifyVal[$1,year])", 4)});
  auto cover = SegmentTokens(Tok("the october 2014"), store, Lexicon::Default(),
                             All(store));
  REQUIRE(cover.size() == 1);
  CHECK(store.rules()[cover[0].rule].pattern.text() == "MONTH:$1 NUM:$2");

  auto two = SegmentTokens(Tok("october , 5"), store, Lexicon::Default(),
                           All(store));
  REQUIRE(two.size() == 2);
  CHECK(ToString(store.rules()[two[1].rule].operations) ==
        "(ModifyVal[$1,dayOfMonth])");
}

TEST_CASE("merging") {
  RuleStore store({MakeRule("MONTH:$1", "(ModifyEnum[$1])", 9),
                   MakeRule("NUM:$1", "(ModifyVal[$1,year])", 4),
                   MakeRule("NUM:$1 years", "(Add[$1,year])", 3,
                            ValueKind::kDuration),
                   MakeRule("NUM:$1 months", "(Add[$1,month])", 3,
                            ValueKind::kDuration)});
  auto tokens = Tok("october 2014");
  auto cover = SegmentTokens(tokens, store, Lexicon::Default(), All(store));
  CHECK(ToString(MergeSegments(cover, store)) ==
        "(ModifyVal[2014,year], ModifyEnum[October])");
  NormalizationResult d = Norm("1 years and 2 months", "2021-05-17", store);
  CHECK(d.via == Via::kSegmented);
  CHECK(d.timex_type == "DURATION");
  CHECK(d.value == "P1Y2M");

  int months = static_cast<int>(store.Find("MONTH:$1") - store.rules().data());
  int years =
      static_cast<int>(store.Find("NUM:$1 years") - store.rules().data());
  std::vector<Segment> mixed = {
      {months, 0, 1, *store.rules()[months].pattern.Match(Tok("october"))},
      {years, 1, 3, *store.rules()[years].pattern.Match(Tok("2 years"))}};
  CHECK_THROWS_AS(MergeSegments(mixed, store), Error);
}

TEST_CASE("timex types") {
  CHECK(TimexType(ParseTimexValue("2021-05-17")) == "DATE");
  CHECK(TimexType(ParseTimexValue("2021-05-17T12:00")) == "TIME");
  CHECK(TimexType(ParseTimexValue("2021-05-17TMO")) == "TIME");
  CHECK(TimexType(ParseTimexValue("P2M")) == "DURATION");
  CHECK(TimexType(ParseTimexValue("2021-WXX")) == "SET");
  CHECK(TimexType(ParseTimexValue("PAST_REF")) == "DATE");
}
