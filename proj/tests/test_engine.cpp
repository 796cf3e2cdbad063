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

#include <algorithm>
#include <functional>

#include "doctest.h"
#include "sam/engine.hpp"
#include "sam/spec_io.hpp"
#include "sam/trace_io.hpp"
#include "support/generators.hpp"

using namespace sam;

namespace {

SpecDocument fixture(const char* name) { return load_spec_file(std::string(SAM_FIXTURE_DIR "/") + name); }

std::vector<Trace> run_doc(const SpecDocument& doc) { return run(doc.env, doc.sim, doc.events); }

std::vector<std::string> actions_of(const Trace& t) {
  std::vector<std::string> out;
  for (const auto& e : t.events) out.push_back(e.actor + ":" + e.action + "@" + e.time.to_string());
  return out;
}

EventRecord& by_action(Trace& t, const std::string& action) {
  for (auto& e : t.events) {
    if (e.action == action) return e;
  }
  FAIL("no event for ", action);
  throw;
}

const char* kUnlicensed = R"({"version": 1, "environment": "E",
    "laws": {"SM": false, "RM": false, "CA": false},
    "actions": [{"id": "go", "send": {"to": "B", "transaction": "m"}}, {"id": "m", "receive": true}, "done"],
    "actors": [{"name": "A", "rel": ["on"], "act": ["go"], "proact": [["on", "go"]]},
               {"name": "B", "trn": ["m"], "act": ["done"], "react": [["m", "done"]]}],
    "sim": {"violation_policy": "%"}})";

SpecDocument unlicensed(const char* policy) {
  std::string text = kUnlicensed;
  text.replace(text.find('%'), 1, policy);
  return parse_spec(text);
}

}  // namespace

TEST_CASE("one message between two actors") {
  const auto doc = fixture("two-actor.sam");
  const auto traces = run_doc(doc);
  REQUIRE(traces.size() == 1);
  const auto& t = traces[0];
  CHECK(t.branch_id == "-");
  CHECK_FALSE(t.truncated);
  REQUIRE(t.events.size() == 4);
  // ping at 0 on ca is 1/2 on cb; the delivery delay adds 1.
  CHECK(t.events[2].action == "msg");
  CHECK(t.events[2].time == TimeSet::moment("cb", Rational(3, 2)));
  CHECK((t.events[3].action == "ack" || t.events[3].action == "nack"));
  CHECK(t.messages == std::vector<std::pair<std::string, std::string>>{{t.events[1].id, t.events[2].id}});
  CHECK(check_trace(t, doc.env).empty());
}

TEST_CASE("regular reactions last their length") {
  auto doc = fixture("two-actor.sam");
  bool saw_ack = false;
  for (std::uint64_t seed = 0; seed < 20 && !saw_ack; ++seed) {
    doc.sim.seed = seed;
    const auto t = run_doc(doc)[0];
    if (t.events[3].action != "ack") continue;
    saw_ack = true;
    CHECK(t.events[3].time == TimeSet::interval("cb", Rational(3, 2), Rational(7, 2)));
    CHECK(check_trace(t, doc.env).empty());
  }
  CHECK(saw_ack);
}

TEST_CASE("the same seed gives the same trace") {
  const auto doc = fixture("two-actor.sam");
  std::set<std::string> outcomes;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = doc;
    d.sim.seed = seed;
    const auto first = write_trace(run_doc(d)[0]);
    CHECK(first == write_trace(run_doc(d)[0]));
    outcomes.insert(first);
  }
  CHECK(outcomes.size() == 2);
}

TEST_CASE("enumerate-all on the three-actor fixture") {
  const auto doc = fixture("three-actor.sam");
  const auto traces = run_doc(doc);
  std::map<std::string, std::vector<std::string>> got;
  for (const auto& t : traces) {
    got[t.branch_id] = actions_of(t);
    CHECK(check_trace(t, doc.env).empty());
    CHECK_FALSE(t.truncated);
  }
  const std::vector<std::string> head{"A:ready@[0,0]", "A:ask@[0,0]", "B:req@[1,1]"};
  auto with = [&](std::vector<std::string> tail) {
    auto v = head;
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
  };
  const std::map<std::string, std::vector<std::string>> expected{
      {"0", with({"B:drop@[3/2,3/2]"})},
      {"1.0", with({"B:fwd@[3/2,3/2]", "C:note@[2,2]", "C:no@[2,2]"})},
      {"1.1", with({"B:fwd@[3/2,3/2]", "C:note@[2,2]", "C:yes@[2,2]"})},
  };
  CHECK(got == expected);

  for (const auto& t : traces) CHECK(run_branch(doc.env, doc.sim, doc.events, t.branch_id) == t);
}

TEST_CASE("illegal messengers are dropped or fatal by policy") {
  const auto drop = unlicensed("drop");
  const auto traces = run_doc(drop);
  REQUIRE(traces.size() == 1);
  CHECK(traces[0].messages.empty());
  CHECK(std::none_of(traces[0].events.begin(), traces[0].events.end(),
                     [](const EventRecord& e) { return e.actor == "B"; }));
  CHECK_THROWS_AS(run_doc(unlicensed("error")), RunError);
}

TEST_CASE("max_steps truncates and quiescence does not") {
  auto doc = fixture("three-actor.sam");
  doc.sim.mode = SimMode::sampled;
  CHECK_FALSE(run_doc(doc)[0].truncated);
  doc.sim.max_steps = 2;
  const auto t = run_doc(doc)[0];
  CHECK(t.truncated);
  CHECK(t.events.size() <= 3);
}

TEST_CASE("invalid configs are rejected") {
  SimConfig c;
  c.timing[{"B", "req"}] = TimingRule{Timing::delayed, 0};
  CHECK_FALSE(validate_config(c).empty());
  c.timing.clear();
  c.delivery_delay[{"A", "B"}] = -1;
  CHECK_FALSE(validate_config(c).empty());
  const auto doc = fixture("two-actor.sam");
  CHECK_THROWS_AS(run(doc.env, c, doc.events), ValidationError);
}

TEST_CASE("corrupted traces are caught") {
  const auto doc = fixture("three-actor.sam");
  const auto traces = run_doc(doc);
  const Trace base = traces.back();
  REQUIRE(check_trace(base, doc.env).empty());

  const std::vector<std::pair<const char*, std::function<void(Trace&)>>> corruptions{
      {"reaction outside react", [](Trace& t) { by_action(t, "yes").action = "drop"; }},
      {"delivery before sending", [](Trace& t) { by_action(t, "req").time = TimeSet::moment("cb", Rational(-1)); }},
      {"delayed reaction not after trigger", [](Trace& t) { by_action(t, "fwd").time = TimeSet::moment("cb", 1); }},
      {"singular action with duration", [](Trace& t) { by_action(t, "yes").time = TimeSet::interval("cc", 2, 3); }},
      {"message to a stranger", [](Trace& t) { by_action(t, "note").actor = "A"; }},
      {"message edge without sender", [](Trace& t) { t.messages.back().first = "e1"; }},
      {"unknown dependency", [](Trace& t) { by_action(t, "yes").depends_on = {"e99"}; }},
      {"unknown action", [](Trace& t) { by_action(t, "yes").action = "dance"; }},
  };
  int caught = 0;
  for (const auto& [name, corrupt] : corruptions) {
    Trace t = base;
    corrupt(t);
    INFO(name);
    const bool flagged = !check_trace(t, doc.env).empty();
    CHECK(flagged);
    caught += flagged;
  }
  CHECK(caught >= 5);
}

TEST_CASE("replay reports the first divergence") {
  const auto doc = fixture("three-actor.sam");
  const auto traces = run_doc(doc);
  for (const auto& t : traces) CHECK(replay(doc.env, doc.sim, doc.events, t).identical);

  Trace altered = traces[1];
  altered.events[3].action = "drop";
  const auto r = replay(doc.env, doc.sim, doc.events, altered);
  CHECK_FALSE(r.identical);
  CHECK(r.first_divergence == std::optional<std::size_t>(3));

  Trace shorter = traces[1];
  shorter.events.pop_back();
  const auto s = replay(doc.env, doc.sim, doc.events, shorter);
  CHECK_FALSE(s.identical);
  CHECK(s.first_divergence == std::optional<std::size_t>(5));
}

TEST_CASE("seeded runs over generated environments are clean") {
  testing::Rng rng(99);
  int runs = 0;
  std::size_t messages = 0, reactions = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::generate_environment(rng);
    SimConfig config;
    config.seed = static_cast<std::uint64_t>(i);
    config.max_steps = 200;
    const auto traces = run(g.env, config, g.events);
    REQUIRE(traces.size() == 1);
    const auto problems = check_trace(traces[0], g.env);
    INFO("run ", i, ": ", problems.empty() ? Violation{} : problems.front());
    CHECK(problems.empty());
    CHECK(write_trace(run(g.env, config, g.events)[0]) == write_trace(traces[0]));
    messages += traces[0].messages.size();
    for (const auto& e : traces[0].events) reactions += e.kind == EventKind::reaction;
    ++runs;
  }
  CHECK(runs == 200);
  MESSAGE(messages, " messages, ", reactions, " reactions");
  CHECK(messages > 50);
  CHECK(reactions > 50);
}
