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


#include <algorithm>

#include "doctest.h"
#include "oracles.h"
#include "timenorm/capture.h"

using namespace timenorm;

namespace {

TemporalValue V(std::string_view text) { return ParseTimexValue(text); }

std::vector<std::string> Texts(const CaptureResult &r) {
  std::vector<std::string> out;
  for (const OperationSequence &s : r.sequences) out.push_back(ToString(s));
  return out;
}

bool Contains(const CaptureResult &r, std::string_view seq) {
  auto texts = Texts(r);
  return std::find(texts.begin(), texts.end(), seq) != texts.end();
}

}  // namespace

TEST_CASE("last october") {
  CaptureResult r = Capture({V("2021-05-17"), V("2020-10"), {}});
  CHECK(r.status == CaptureStatus::kOk);
  CHECK(Contains(r, "(ToLast[year], ModifyEnum[October])"));
  for (const OperationSequence &s : r.sequences) {
    CHECK(Execute(s, V("2021-05-17")) == V("2020-10"));
    CHECK(!IsRedundant(s, V("2021-05-17")));
    CHECK(SortSequence(s) == s);
  }
}

TEST_CASE("today") {
  for (const char *b : {"2021-05-17", "2000-02-29", "2021-05-17T08:30"}) {
    TemporalValue base = V(b);
    TemporalValue target = Truncate(base, TimeUnit::kDay);
    CaptureResult r = Capture({base, target, {}});
    CHECK(Contains(r, base == target ? "()" : "(Equal[day])"));
  }
}

TEST_CASE("durations") {
  CaptureResult r = Capture({V("2021-05-17"), V("P2M"), {2}});
  CHECK(Texts(r) == std::vector<std::string>{"(Add[2,month])"});
  CaptureResult two = Capture({V("2021-05-17"), V("P1Y2M"), {2, 1}});
  CHECK(Texts(two) == std::vector<std::string>{"(Add[1,year], Add[2,month])"});
  // Counts must come from the expression.
  CHECK(Capture({V("2021-05-17"), V("P2M"), {}}).status ==
        CaptureStatus::kNoSequenceFound);
}

TEST_CASE("approximate references") {
  CaptureResult r = Capture({V("2021-05-17"), V("PAST_REF"), {}});
  CHECK(Texts(r) == std::vector<std::string>{"(ApproxRef[Past])"});
}

TEST_CASE("pool discipline") {
  CaptureResult none = Capture({V("2021-05-17"), V("2021-05-21"), {}});
  CHECK(Contains(none, "(ModifyEnum[Friday])"));
  CHECK(!Contains(none, "(ModifyVal[5,dayOfWeek])"));
  CHECK(!Contains(none, "(Forward[4,day])"));
  CaptureResult five = Capture({V("2021-05-17"), V("2021-05-21"), {5}});
  CHECK(Contains(five, "(ModifyVal[5,dayOfWeek])"));
  CHECK(!Contains(five, "(Forward[4,day])"));
  for (const OperationSequence &s : five.sequences) {
    CHECK(RespectsPool(s, {5}));
  }
  CHECK(RespectsPool(ParseSequence("(Forward[2,day], ModifyVal[2,monthOfYear])"),
                     {2, 2}));
  CHECK(!RespectsPool(ParseSequence("(Forward[2,day], ModifyVal[2,monthOfYear])"),
                      {2}));
}

TEST_CASE("identity") {
  CaptureResult r = Capture({V("2021-05-17"), V("2021-05-17"), {}});
  REQUIRE(!r.sequences.empty());
  CHECK(r.sequences.front().empty());
}

TEST_CASE("recurring values") {
  CaptureResult week = Capture({V("2021-05-17"), V("2021-WXX"), {}});
  CHECK(Contains(week, "(MakeSet[week])"));
  CHECK(!Contains(week, "(Equal[year], MakeSet[week])"));
  CaptureResult every = Capture({V("2021-05-17"), V("XXXX-WXX"), {}});
  CHECK(!every.sequences.empty());
  for (const OperationSequence &s : every.sequences) {
    CHECK(Execute(s, V("2021-05-17")) == V("XXXX-WXX"));
  }
}

TEST_CASE("budget") {
  CaptureOptions tight;
  tight.node_budget = 10;
  CaptureResult r = Capture({V("2021-05-17"), V("2020-10"), {}}, tight);
  CHECK(r.status == CaptureStatus::kBudgetExceeded);
  CHECK(r.nodes <= 10);
  for (const OperationSequence &s : r.sequences) {
    CHECK(Execute(s, V("2021-05-17")) == V("2020-10"));
  }
}

TEST_CASE("unreachable targets") {
  CaptureOptions one;
  one.max_length = 1;
  CaptureResult r = Capture({V("2021-05-17"), V("1850-03-02"), {}}, one);
  CHECK(r.status == CaptureStatus::kNoSequenceFound);
  CHECK(r.sequences.empty());
}

TEST_CASE("matches brute force on fixed cases") {
  CaptureOptions options;
  options.units = {TimeUnit::kYear, TimeUnit::kMonth, TimeUnit::kWeek,
                   TimeUnit::kDay};
  oracle::CaptureOracle brute({0, 1, 2, 3, 4, 5, 7, 10, 2014});
  struct Case {
    const char *base, *target;
    std::vector<int> pool;
  };
  for (const Case &c : std::vector<Case>{
           {"2021-05-17", "2020-10", {}},
           {"2021-05-17", "2021-05-21", {5}},
           {"2021-05-17", "2014-10", {2014}},
           {"2021-05-17", "2021-W18", {2}},
           {"2021-05", "2021-03", {2}},
           {"2021-01-31", "2021-02-28", {1}},
           {"2021-05-17", "2021-05-07", {1}},
       }) {
    CAPTURE(std::string(c.base));
    CAPTURE(std::string(c.target));
    CaptureResult r = Capture({V(c.base), V(c.target), c.pool}, options);
    auto texts = Texts(r);
    std::set<std::string> got(texts.begin(), texts.end());
    CHECK(got == brute.Run(V(c.base), V(c.target), c.pool));
  }
}
