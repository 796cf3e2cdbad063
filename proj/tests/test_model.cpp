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

#include "doctest.h"
#include "sam/model.hpp"
#include "sam/spec_io.hpp"
#include "support/generators.hpp"

using namespace sam;

namespace {

Environment env_of(const std::string& body) {
  return parse_spec_unchecked(R"({"version": 1, "environment": "E", )" + body + "}").env;
}

bool has_rule(const ViolationList& list, const std::string& rule) {
  return std::any_of(list.begin(), list.end(), [&](const Violation& v) { return v.rule == rule; });
}

Environment three_actors() {
  return env_of(R"("laws": {"SM": false, "RM": false, "CA": false},
                   "actors": [{"name": "A"}, {"name": "B"}, {"name": "C"}])");
}

}  // namespace

TEST_CASE("validation reports broken invariants") {
  auto env = env_of(R"("actions": ["x"], "actors": [{"name": "A", "act": ["x"]}])");
  CHECK(validate_environment(env).ok());

  auto bad = env;
  bad.actors[0].react.insert({"t", "x"});
  CHECK(has_rule(validate_environment(bad).violations, "react"));

  bad = env;
  bad.actors.push_back(bad.actors[0]);
  CHECK(has_rule(validate_environment(bad).violations, "actor.name"));

  bad = env;
  bad.actors[0].act.insert("ghost");
  CHECK(has_rule(validate_environment(bad).violations, "actp"));

  bad = env;
  bad.actors[0].components.insert("A");
  CHECK(has_rule(validate_environment(bad).violations, "components"));

  bad = env;
  bad.actors[0].facq.push_back("Nobody");
  CHECK(has_rule(validate_environment(bad).violations, "facq"));

  bad = env;
  bad.actors[0].marks["nothing"] = Marks{false, true};
  CHECK(has_rule(validate_environment(bad).violations, "marks"));
}

TEST_CASE("component cycles are rejected") {
  auto env = env_of(R"("actors": [{"name": "A", "components": ["B"]}, {"name": "B", "components": ["A"]}])");
  CHECK(has_rule(validate_environment(env).violations, "components.cycle"));
}

TEST_CASE("relation kinds are checked against their endpoints") {
  auto env = env_of(R"("actors": [
      {"name": "W", "components": ["P"], "parts": ["gear"],
       "rel": [{"id": "in", "kind": "inner", "endpoints": ["P", "gear"]},
               {"id": "it", "kind": "internal", "endpoints": ["W", "gear"]},
               {"id": "ou", "kind": "outer", "endpoints": ["W", "E"]},
               {"id": "md", "kind": "intermediate", "endpoints": ["gear", "Q"]},
               {"id": "ex", "kind": "external", "endpoints": ["W", "Q"]},
               {"id": "pr"}]},
      {"name": "P"}, {"name": "Q"}])");
  CHECK(validate_environment(env).ok());
  env.actors[0].rel[4].kind = RelationKind::inner;
  CHECK(has_rule(validate_environment(env).violations, "relation.kind"));
  env.actors[0].rel[4].endpoints = {"W", "Nowhere"};
  CHECK(has_rule(validate_environment(env).violations, "relation.endpoint"));
}

TEST_CASE("asserted laws route by policy") {
  const char* body = R"("laws": {"SM": true, "RM": true, "CA": true, "policy": "%"},
      "actions": [{"id": "go", "send": {"to": "B", "transaction": "m"}}, "m"],
      "actors": [{"name": "A", "act": ["go"]}, {"name": "B", "trn": ["m"]}])";
  std::string reject = body;
  reject.replace(reject.find('%'), 1, "reject");
  std::string warn = body;
  warn.replace(warn.find('%'), 1, "warn");
  const auto r = validate_environment(env_of(reject));
  CHECK(has_rule(r.violations, "SM"));
  CHECK(has_rule(r.violations, "RM"));
  const auto w = validate_environment(env_of(warn));
  CHECK(w.ok());
  CHECK(has_rule(w.warnings, "SM"));
  CHECK(has_rule(w.warnings, "RM"));

  auto fixed = env_of(reject);
  fixed.actors[0].facq = {"B"};
  fixed.actors[1].bacq = {"A"};
  CHECK(validate_environment(fixed).ok());
  CHECK(validate_environment(fixed).warnings.empty());
}

TEST_CASE("generated environments are valid") {
  testing::Rng rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const auto g = testing::generate_environment(rng);
    const auto report = validate_environment(g.env);
    INFO("draw ", i, ": ", report.violations.empty() ? Violation{} : report.violations.front());
    REQUIRE(report.ok());
    CHECK(report.warnings.empty());
  }
}

TEST_CASE("messaging predicates, exhaustively over three actors") {
  const std::vector<std::string> names{"A", "B", "C"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& x : names) {
    for (const auto& y : names) {
      if (x != y) edges.emplace_back(x, y);
    }
  }
  for (unsigned fmask = 0; fmask < 64; ++fmask) {
    for (unsigned bmask = 0; bmask < 64; ++bmask) {
      auto env = three_actors();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto idx = [&](const std::string& n) { return static_cast<std::size_t>(n[0] - 'A'); };
        if (fmask >> i & 1U) env.actors[idx(edges[i].first)].facq.push_back(edges[i].second);
        if (bmask >> i & 1U) env.actors[idx(edges[i].first)].bacq.push_back(edges[i].second);
      }
      std::size_t expected = 0;
      for (const auto& [x, y] : edges) {
        const bool fwd = can_send(env, x, y);
        CHECK(fwd == std::count(env.actor(x).facq.begin(), env.actor(x).facq.end(), y) > 0);
        // C in FAcq(A) must mirror A in BAcq(C).
        if (fwd != can_receive(env, x, y)) ++expected;
        CHECK(friends(env, x).count(y) == (fwd && can_receive(env, y, x)));
      }
      CHECK(check_connectivity(env).size() == expected);
    }
  }
  auto env = three_actors();
  CHECK_THROWS_AS(can_send(env, "A", "Z"), NameError);
}

TEST_CASE("rank ordering on the component forest") {
  auto env = env_of(R"("actors": [
      {"name": "Top", "components": ["Mid"]}, {"name": "Mid", "components": ["Leaf"]},
      {"name": "Leaf"}, {"name": "Other", "components": ["Leaf2"]}, {"name": "Leaf2"},
      {"name": "Mixed", "components": ["Top", "Leaf2"]}])");
  CHECK(rank_compare(env, "Leaf", "Top") == RankOrder::lower);
  CHECK(rank_compare(env, "Top", "Mid") == RankOrder::higher);
  CHECK(rank_compare(env, "Mid", "Other") == RankOrder::equal);
  CHECK(rank_compare(env, "Leaf", "Leaf2") == RankOrder::equal);
  CHECK(rank_compare(env, "Top", "Other") == RankOrder::incomparable);
  CHECK(rank_compare(env, "Mixed", "Other") == RankOrder::incomparable);
  CHECK(rank_compare(env, "Mixed", "Leaf2") == RankOrder::higher);
  CHECK(rank_compare(env, "E", "Leaf") == RankOrder::higher);
  CHECK(rank_compare(env, "Leaf", "E") == RankOrder::lower);
  CHECK_THROWS_AS(rank_compare(env, "Leaf", "Nobody"), NameError);
}

TEST_CASE("domain embedding and the modeling axiom") {
  const auto e = three_actors();
  auto d = env_of(R"("actors": [{"name": "x"}, {"name": "y"}])");
  CHECK(check_domain_embedding(e, d, {{"x", "A"}, {"y", "B"}}).ok);
  CHECK_FALSE(check_domain_embedding(e, d, {{"x", "A"}}).ok);
  CHECK_FALSE(check_domain_embedding(e, d, {{"x", "A"}, {"y", "A"}}).ok);
  CHECK_FALSE(check_domain_embedding(e, d, {{"x", "A"}, {"y", "Z"}}).ok);

  CHECK(check_modeling_axiom(e, {"o1", "o2"}, {{"o1", "A"}, {"o2", "A"}}).ok);
  const auto missing = check_modeling_axiom(e, {"o1", "o2"}, {{"o1", "A"}, {"o2", "Q"}});
  REQUIRE(missing.witnesses.size() == 1);
  CHECK(missing.witnesses[0].path == "o2");
}

TEST_CASE("extended representations must restrict to react and proact") {
  ActorSpec a;
  a.name = "A";
  a.trn = {"t"};
  a.rel = {{"r", RelationKind::property, {}}};
  a.act = {"x", "y"};
  a.react = {{"t", "x"}};
  a.proact = {{"r", "y"}};
  const auto ok = ExtendedActorSpec::make(a, "E", {{"t", "x"}, {"u", "y"}}, {{"r", "y"}, {"s", "x"}});
  CHECK(ok.vreact().size() == 2);
  CHECK(ok.env_name() == "E");
  CHECK_THROWS_AS(ExtendedActorSpec::make(a, "E", {{"u", "y"}}, {{"r", "y"}}), Error);
  const auto broken = check_restrictions(a, {{{"t", "x"}, {"t", "y"}}, {}});
  REQUIRE(broken.size() == 2);
  CHECK(broken[0].rule == "Lemma3.14");
  CHECK(broken[1].rule == "Lemma3.15");
}
