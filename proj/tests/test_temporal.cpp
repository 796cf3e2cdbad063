/*
 * Copyright 2026 The SAM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <random>

#include "doctest.h"
#include "sam/rational.hpp"
#include "sam/temporal.hpp"
#include "support/generators.hpp"

using namespace sam;

namespace {

Rational q(const char* text) { return parse_rational(text); }

EventRecord ev(std::string id, std::vector<Interval> pieces, std::set<std::string> deps = {},
               std::string clock = "c") {
  EventRecord e;
  e.id = std::move(id);
  e.actor = "A";
  e.action = "x";
  e.time = TimeSet(std::move(clock), std::move(pieces));
  e.depends_on = std::move(deps);
  return e;
}

SyncGraph one_clock() { return SyncGraph({{"c", "A"}}, {}); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(format_rational(q("6/4")) == "3/2");
  CHECK(format_rational(q("-2/1")) == "-2");
  CHECK(format_rational(q("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("time sets normalize") {
  const TimeSet t("c", {{4, 7}, {0, 1}, {1, 2}, {5, 6}});
  REQUIRE(t.pieces().size() == 2);
  CHECK(t.to_string() == "[0,2],[4,7]");
  CHECK(TimeSet("c", t.pieces()) == t);
  CHECK(TimeSet::moment("c", 2).momentary());
  CHECK_FALSE(t.is_interval());
  CHECK_THROWS_AS(TimeSet("c", {{3, 1}}), Error);
  CHECK(TimeSet::parse("c", "[0,1/2],[3,4]") == TimeSet("c", {{0, q("1/2")}, {3, 4}}));
}

TEST_CASE("clock maps are exact affine images") {
  SyncGraph sync({{"a", "A"}, {"b", "B"}, {"d", "D"}}, {{"a", "b", 2, 1}});
  CHECK(map_to_clock(TimeSet::interval("a", 0, 3), "b", sync) == TimeSet::interval("b", 1, 7));
  CHECK(map_to_clock(TimeSet::interval("b", 1, 7), "a", sync) == TimeSet::interval("a", 0, 3));
  CHECK(map_to_clock(TimeSet::interval("a", 0, 3), "a", sync) == TimeSet::interval("a", 0, 3));
  CHECK_THROWS_AS(map_to_clock(TimeSet::interval("a", 0, 3), "d", sync), IncomparableError);
}

TEST_CASE("a consistent three-clock cycle round-trips to the identity") {
  // a -> b: 2t+1, b -> c: t/2 - 1/2, so a -> c is the identity.
  SyncGraph sync({{"a", ""}, {"b", ""}, {"c", ""}},
                 {{"a", "b", 2, 1}, {"b", "c", q("1/2"), q("-1/2")}, {"c", "a", 1, 0}});
  CHECK(sync.check_consistency().empty());
  const TimeSet t("a", {{0, q("1/3")}, {5, 9}});
  CHECK(map_to_clock(map_to_clock(map_to_clock(t, "b", sync), "c", sync), "a", sync) == t);

  SyncGraph broken({{"a", ""}, {"b", ""}}, {{"a", "b", 2, 0}, {"b", "a", 1, 0}});
  CHECK_FALSE(broken.check_consistency().empty());
}

TEST_CASE("comparability is synchronization connectivity") {
  SyncGraph sync({{"c1", ""}, {"c2", ""}, {"c3", ""}, {"c4", ""}}, {{"c1", "c2", 1, 0}, {"c2", "c3", 1, 5}});
  const auto e1 = ev("e1", {{0, 1}}, {}, "c1");
  const auto e3 = ev("e3", {{0, 1}}, {}, "c3");
  const auto e4 = ev("e4", {{0, 1}}, {}, "c4");
  CHECK(comparable(e1, e1, sync));
  CHECK(comparable(e1, e3, sync));
  CHECK_FALSE(comparable(e1, e4, sync));
  CHECK(concurrent(e1, e4, sync));
  CHECK_THROWS_AS(parallel(e1, e4, sync), IncomparableError);
}

TEST_CASE("dependence is the undirected closure of depends_on") {
  const std::vector<EventRecord> events{ev("a", {{0, 0}}), ev("b", {{1, 1}}, {"a"}), ev("c", {{2, 2}}, {"b"}),
                                        ev("d", {{0, 5}})};
  const CausalGraph causal(events);
  CHECK(causal.dependent("a", "c"));
  CHECK_FALSE(independent(events[1], events[0]));
  CHECK(independent(events[0], events[3], causal));
  CHECK_FALSE(independent(events[0], events[2], causal));
  const auto sync = one_clock();
  CHECK_FALSE(concurrent(events[0], events[1], sync, causal));
  CHECK(concurrent(events[0], events[3], sync, causal));
}

TEST_CASE("parallelism: the three printed counterexamples") {
  const auto sync = one_clock();
  const auto e1 = ev("E1", {{0, 3}});
  const auto e2 = ev("E2", {{2, 5}});
  const auto e3 = ev("E3", {{4, 7}});
  CHECK(parallel(e1, e2, sync));
  CHECK(parallel(e2, e3, sync));
  CHECK_FALSE(parallel(e1, e3, sync));

  const auto r3 = ev("E3", {{0, 1}, {4, 7}});
  CHECK(parallel(e1, r3, sync));
  CHECK(parallel(e2, r3, sync));
  CHECK(parallel(e1, e2, sync));
  const std::vector<EventRecord> all{e1, e2, r3};
  CHECK_FALSE(parallel(all, sync));

  const auto s3 = ev("S3", {{0, 2}});
  const auto s2 = ev("S2", {{2, 4}});
  const auto s1 = ev("S1", {{4, 6}});
  CHECK(strictly_sequential(s3, s2, sync));
  CHECK(strictly_sequential(s2, s1, sync));
  CHECK_FALSE(strictly_sequential(s3, s1, sync));
  CHECK(sequential(s3, s1, sync));
}

TEST_CASE("momentary events are parallel iff their moments coincide") {
  const auto sync = one_clock();
  CHECK(parallel(ev("a", {{2, 2}}), ev("b", {{2, 2}}), sync));
  CHECK_FALSE(parallel(ev("a", {{2, 2}}), ev("b", {{3, 3}}), sync));
  CHECK(parallel(ev("a", {{2, 2}}), ev("b", {{0, 3}}), sync));
}

TEST_CASE("strict parallelism is equality of time sets") {
  const auto sync = one_clock();
  CHECK(strictly_parallel(ev("a", {{0, 3}}), ev("b", {{0, 3}}), sync));
  CHECK_FALSE(strictly_parallel(ev("a", {{0, 3}}), ev("b", {{0, 3}, {5, 5}}), sync));
  SyncGraph two({{"c", ""}, {"d", ""}}, {{"c", "d", 2, 0}});
  CHECK(strictly_parallel(ev("a", {{0, 3}}, {}, "c"), ev("b", {{0, 6}}, {}, "d"), two));
}

TEST_CASE("sequence on closed intervals") {
  const auto sync = one_clock();
  CHECK(sequential(ev("a", {{0, 3}}), ev("b", {{4, 7}}), sync));
  CHECK(sequential(ev("a", {{0, 3}}), ev("b", {{3, 5}}), sync));
  CHECK(strictly_sequential(ev("a", {{0, 3}}), ev("b", {{3, 5}}), sync));
  CHECK(parallel(ev("a", {{0, 3}}), ev("b", {{3, 5}}), sync));
  CHECK_FALSE(sequential(ev("a", {{0, 3}}), ev("b", {{2, 5}}), sync));
}

TEST_CASE("sequence is transitive on random rational grids") {
  testing::Rng rng(11);
  const auto sync = one_clock();
  const auto random_event = [&](const char* id) {
    const Rational lo = testing::grid_point(rng, 6, 3);
    return ev(id, {{lo, lo + testing::grid_point(rng, 3, 3)}});
  };
  int chains = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_event("a");
    const auto b = random_event("b");
    const auto c = random_event("c");
    if (sequential(a, b, sync) && sequential(b, c, sync)) {
      ++chains;
      CHECK(sequential(a, c, sync));
    }
    if (strictly_sequential(a, b, sync)) CHECK(sequential(a, b, sync));
    if (strictly_sequential(a, b, sync) && strictly_sequential(b, c, sync) && b.time.has_positive_duration()) {
      CHECK_FALSE(strictly_sequential(a, c, sync));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("reaction timing classes") {
  const auto sync = one_clock();
  auto trigger = ev("t", {{0, 4}});
  auto reaction = [&](Timing timing, Interval at) {
    auto r = ev("r", {at}, {"t"});
    r.kind = EventKind::reaction;
    r.timing = timing;
    r.trigger = "t";
    return std::vector<EventRecord>{trigger, r};
  };
  CHECK(reaction_timing_check(reaction(Timing::sharp, {0, 2}), sync).empty());
  CHECK(parallel(trigger, reaction(Timing::sharp, {0, 2})[1], sync));
  CHECK(reaction_timing_check(reaction(Timing::reserved, {4, 6}), sync).empty());
  CHECK(reaction_timing_check(reaction(Timing::delayed, {5, 6}), sync).empty());
  CHECK(reaction_timing_check(reaction(Timing::delayed, {4, 6}), sync).size() == 1);
  CHECK(reaction_timing_check(reaction(Timing::reserved, {3, 6}), sync).size() == 1);
  CHECK(reaction_timing_check(reaction(Timing::sharp, {1, 2}), sync).size() == 1);

  auto dangling = reaction(Timing::sharp, {0, 2});
  dangling.erase(dangling.begin());
  CHECK_THROWS_AS(reaction_timing_check(dangling, sync), ReferenceError);
}
