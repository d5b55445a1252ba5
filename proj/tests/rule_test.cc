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


#include <sstream>

#include "doctest.h"
#include "timenorm/rule.h"

using namespace timenorm;

namespace {

AnnotatedExpression Expr(std::string_view surface, std::string_view value,
                         std::string_view dct) {
  AnnotatedExpression e;
  e.surface = std::string(surface);
  e.tokens = Lexicon::Default().Tokenize(surface);
  e.gold_value = std::string(value);
  e.gold_type = "DATE";
  e.dct = *ParseDct(dct);
  return e;
}

std::vector<std::string> Lines(const std::vector<Rule> &rules) {
  std::vector<std::string> out;
  for (const Rule &r : rules) {
    out.push_back(r.pattern.text() + " " + ToString(r.operations));
  }
  return out;
}

bool Has(const std::vector<std::string> &lines, std::string_view line) {
  return std::find(lines.begin(), lines.end(), line) != lines.end();
}

}  // namespace

TEST_CASE("abstraction") {
  auto this_month = AbstractCandidates(Lexicon::Default().Tokenize("this month"),
                                       ParseSequence("(Equal[month])"),
                                       ValueKind::kInstant);
  auto lines = Lines(this_month);
  CHECK(Has(lines, "this TIME_UNIT:$1 (Equal[$1])"));

  auto last_month = AbstractCandidates(Lexicon::Default().Tokenize("last month"),
                                       ParseSequence("(ModifyEnum[April])"),
                                       ValueKind::kInstant);
  CHECK(Lines(last_month) ==
        std::vector<std::string>{"last month (ModifyEnum[April])"});

  auto several = AbstractCandidates(
      Lexicon::Default().Tokenize("several day later"),
      ParseSequence("(ApproxRef[Future])"), ValueKind::kApproxRef);
  CHECK(Lines(several) ==
        std::vector<std::string>{"several day later (ApproxRef[Future])"});

  auto ago = AbstractCandidates(Lexicon::Default().Tokenize("3 weeks ago"),
                                ParseSequence("(Backward[3,week])"),
                                ValueKind::kInstant);
  CHECK(Has(Lines(ago), "NUM:$1 TIME_UNIT:$2 ago (Backward[$1,$2])"));
  for (const Rule &r : ago) {
    auto b = r.pattern.Match(Lexicon::Default().Tokenize("3 weeks ago"));
    REQUIRE(b);
    CHECK(r.Resolve(*b) == ParseSequence("(Backward[3,week])"));
  }
}

TEST_CASE("learning generalizes over units") {
  std::vector<AnnotatedExpression> corpus = {
      Expr("last year", "2020", "2021-05-17"),
      Expr("last month", "2021-04", "2021-05-17"),
      Expr("last week", "2021-W19", "2021-05-17"),
  };
  LearnStats stats;
  RuleStore store = Learn(corpus, {}, &stats);
  const Rule *rule = store.Find("last TIME_UNIT:$1");
  REQUIRE(rule);
  CHECK(ToString(rule->operations) == "(ToLast[$1])");
  CHECK(rule->support == 3);
  CHECK(store.rules().front().pattern.text() == "last TIME_UNIT:$1");
  for (const Rule &r : store.rules()) {
    if (&r != rule) CHECK(r.support < rule->support);
  }
  CHECK(stats.expressions == 3);
  CHECK(stats.captured == 3);
  CHECK(stats.MeanCandidates() >= 1.0);
}

TEST_CASE("learning a single expression") {
  RuleStore store = Learn({Expr("today", "2021-05-17", "2021-05-17T09:00")});
  const Rule *rule = store.Find("today");
  REQUIRE(rule);
  CHECK(ToString(rule->operations) == "(Equal[day])");
  CHECK(rule->support == 1);
}

TEST_CASE("learning skips unsupported gold values") {
  LearnStats stats;
  RuleStore store = Learn({Expr("today", "2021-05-17", "2021-05-17T09:00"),
                           Expr("someday", "XXXX-XX", "2021-05-17")},
                          {}, &stats);
  CHECK(stats.expressions == 2);
  CHECK(stats.skipped == 1);
  CHECK(store.Find("today"));
}

TEST_CASE("empty corpus") {
  CHECK_THROWS_AS(Learn({}), Error);
  try {
    Learn({});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kEmptyCorpus);
  }
}

TEST_CASE("rule file round trip") {
  std::vector<AnnotatedExpression> corpus = {
      Expr("last october", "2020-10", "2021-05-17"),
      Expr("last march", "2020-03", "2021-05-17"),
      Expr("3 weeks ago", "2021-04-26", "2021-05-17"),
      Expr("in 2 months", "P2M", "2021-05-17"),
  };
  RuleStore store = Learn(corpus);
  std::ostringstream out;
  store.Write(out);
  std::istringstream in(out.str());
  RuleStore back = RuleStore::Read(in);
  std::ostringstream again;
  back.Write(again);
  CHECK(again.str() == out.str());
  REQUIRE(back.size() == store.size());

  Rule r = ParseRule("last MONTH:$1\tInstant\t(ToLast[year], ModifyEnum[$1])\t3\t3");
  CHECK(r.support == 3);
  CHECK(FormatRule(r) ==
        "last MONTH:$1\tInstant\t(ToLast[year], ModifyEnum[$1])\t3\t3");
  CHECK_THROWS_AS(ParseRule("last MONTH:$1\tInstant\t(ToLast[year])"), Error);
  CHECK_THROWS_AS(ParseRule("last MONTH:$1\tInstant\t(Bogus[1])\t1\t1"), Error);
}

TEST_CASE("store order and lookup") {
  auto rule = [](std::string_view p, std::string_view ops, int support,
                 int pattern_support) {
    Rule r;
    r.pattern = Pattern::Parse(p);
    r.operations = ParseSequence(ops);
    r.support = support;
    r.pattern_support = pattern_support;
    return r;
  };
  RuleStore store({rule("today", "(Equal[day])", 1, 1),
                   rule("MONTH:$1", "(ModifyEnum[$1])", 9, 9),
                   rule("NUM:$1", "(ModifyVal[$1,year])", 4, 6),
                   rule("yesterday", "(ToLast[day])", 4, 4)});
  std::vector<std::string> order;
  for (const Rule &r : store.rules()) order.push_back(r.pattern.text());
  CHECK(order ==
        std::vector<std::string>{"MONTH:$1", "NUM:$1", "yesterday", "today"});
  auto tokens = Lexicon::Default().Tokenize("october");
  auto c = store.Candidates(tokens[0]);
  REQUIRE(c.size() == 1);
  CHECK(store.rules()[c[0]].pattern.text() == "MONTH:$1");
  CHECK(store.Find("today"));
  CHECK(!store.Find("tomorrow"));
}
