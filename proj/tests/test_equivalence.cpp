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
#include "sam/equivalence.hpp"
#include "sam/spec_io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sam;

namespace {

ActorSpec small_actor(const std::string& name) {
  ActorSpec a;
  a.name = name;
  a.trn = {"t"};
  a.rel = {{"r", RelationKind::property, {}}};
  a.act = {"x", "y"};
  a.react = {{"t", "x"}};
  a.proact = {{"r", "y"}};
  return a;
}

ActionCatalog small_catalog() {
  return {{"x", Action::atomic("x")}, {"y", Action::atomic("y")}, {"idle", negate(Action::atomic("work"))}};
}

testing::OracleIso as_oracle(const ComponentIsomorphism& iso) { return {iso.act_map, iso.trn_map, iso.rel_map}; }

}  // namespace

TEST_CASE("identity and dynamic equivalence") {
  const auto catalog = small_catalog();
  auto a = small_actor("A");
  auto b = small_actor("B");
  CHECK(identical(a, b));
  CHECK(dyn_equivalent(a, b, catalog));

  b.act.insert("idle");
  b.react.insert({"t", "idle"});
  CHECK_FALSE(identical(a, b));
  CHECK(dyn_equivalent(a, b, catalog));
  CHECK(void_normalized(b, catalog) == void_normalized(a, catalog));

  b.rel[0].kind = RelationKind::inner;
  CHECK_FALSE(identical(a, b));
  CHECK(dyn_equivalent(a, b, catalog));
  CHECK_FALSE(homological(a, b, catalog));
  CHECK(dyn_homological(a, b, catalog));
}

TEST_CASE("homology finds renamings and their witnesses") {
  const auto catalog = small_catalog();
  const auto a = small_actor("A");
  ActorSpec b;
  b.name = "B";
  b.trn = {"u"};
  b.rel = {{"s", RelationKind::property, {}}};
  b.act = {"p", "q"};
  b.react = {{"u", "q"}};
  b.proact = {{"s", "p"}};
  const auto iso = homological(a, b, catalog);
  REQUIRE(iso);
  CHECK(iso->act_map == std::map<std::string, std::string>{{"x", "q"}, {"y", "p"}});
  CHECK(iso->trn_map.at("t") == "u");
  CHECK(iso->rel_map.at("r") == "s");
  CHECK(is_witness(a, b, *iso, catalog));
  auto wrong = *iso;
  std::swap(wrong.act_map["x"], wrong.act_map["y"]);
  CHECK_FALSE(is_witness(a, b, wrong, catalog));
  CHECK_FALSE(identical(a, b));
}

TEST_CASE("isomorphism search agrees with brute force") {
  testing::Rng rng(77);
  int agreeing = 0;
  for (int i = 0; i < 150; ++i) {
    ActionCatalog catalog;
    const auto sizes = [&] { return 1 + testing::pick(rng, 4); };
    const auto a = testing::random_actor(rng, "A", sizes(), sizes(), sizes(), catalog);
    ActorSpec b;
    switch (i % 3) {
      case 0: b = testing::renamed_actor(rng, a, "B", catalog); break;
      case 1: b = testing::perturbed_actor(rng, testing::renamed_actor(rng, a, "B", catalog), "B"); break;
      default: b = testing::random_actor(rng, "B", a.act.size(), a.trn.size(), a.rel.size(), catalog); break;
    }
    for (const bool dynamic : {false, true}) {
      for (const bool preserve : {false, true}) {
        const auto expected = testing::brute_force_isomorphisms(a, b, catalog, dynamic, preserve);
        const IsoOptions options{preserve};
        const auto found = dynamic ? dyn_homological(a, b, catalog, options) : homological(a, b, catalog, options);
        INFO("pair ", i, dynamic ? " dynamic" : " structural", preserve ? " preserving" : "");
        REQUIRE(found.has_value() == !expected.empty());
        if (found) {
          CHECK(expected.count(as_oracle(*found)));
          CHECK(is_witness(a, b, *found, catalog, options));
        }
        ++agreeing;
      }
    }
  }
  CHECK(agreeing == 600);
}

TEST_CASE("the four relations are equivalences and nest") {
  testing::Rng rng(3);
  ActionCatalog catalog;
  std::vector<ActorSpec> actors;
  for (int i = 0; i < 4; ++i) {
    const auto a = testing::random_actor(rng, "A" + std::to_string(i), 3, 2, 2, catalog);
    actors.push_back(a);
    actors.push_back(testing::renamed_actor(rng, a, "R" + std::to_string(i), catalog));
    actors.push_back(testing::perturbed_actor(rng, a, "P" + std::to_string(i)));
    auto copy = a;
    copy.name = "C" + std::to_string(i);
    actors.push_back(copy);
  }
  for (const auto rel : {PairRelation::identical, PairRelation::dyn_equivalent, PairRelation::homological,
                         PairRelation::dyn_homological}) {
    for (const auto& x : actors) {
      CHECK(related(x, x, rel, catalog));
      for (const auto& y : actors) {
        const bool xy = related(x, y, rel, catalog);
        CHECK(xy == related(y, x, rel, catalog));
        if (!xy) continue;
        for (const auto& z : actors) {
          if (related(y, z, rel, catalog)) CHECK(related(x, z, rel, catalog));
        }
      }
    }
  }
  for (const auto& x : actors) {
    for (const auto& y : actors) {
      const bool id = identical(x, y);
      const bool de = dyn_equivalent(x, y, catalog);
      const bool ho = homological(x, y, catalog).has_value();
      const bool dh = dyn_homological(x, y, catalog).has_value();
      if (id) CHECK((de && ho));
      if (de || ho) CHECK(dh);
    }
  }
}

TEST_CASE("fixture actors classify as described") {
  const auto doc = load_spec_file(SAM_FIXTURE_DIR "/automata.sam");
  const auto& env = doc.env;

  CHECK(classify("OneState", env).behavioral == Behavioral::primitive);

  const auto receptor = classify("Receptor", env);
  CHECK(receptor.communication.inactive);
  CHECK(receptor.communication.undemanding);
  CHECK(receptor.communication.receptive);
  CHECK_FALSE(receptor.communication.closed);

  const auto generator = classify("Generator", env);
  CHECK(generator.communication.non_receptive);
  CHECK(generator.communication.active);
  CHECK_FALSE(generator.communication.open);

  // Every action of the automata depends on input and state together.
  CHECK(classify("Binary", env).behavioral == Behavioral::automatic);
  const auto iso = homological(env.actor("Binary"), env.actor("Letters"), env.actions);
  REQUIRE(iso);
  CHECK(iso->trn_map == std::map<std::string, std::string>{{"0", "a"}, {"1", "b"}});

  CHECK_THROWS_AS(classify("Nobody", env), NameError);
}

TEST_CASE("classification lattice on generated actors") {
  testing::Rng rng(41);
  int reports = 0;
  for (int i = 0; i < 300; ++i) {
    const auto g = testing::generate_environment(rng);
    for (const auto& a : g.env.actors) {
      const auto r = classify(a, g.env);
      const auto& c = r.communication;
      ++reports;
      CHECK(check_report_lattice(r).empty());
      if (c.closed) CHECK((c.inactive && c.non_receptive && c.undemanding));
      if (c.non_receptive && c.inactive) CHECK(c.closed);
      if (c.open) CHECK(c.active);
      if (c.receptive && c.active) CHECK(c.open);
      if (c.inactive) CHECK(c.undemanding);
      if (r.structural.prime) CHECK(r.structural.primitive);
      if (r.structural.compound) CHECK(r.structural.composite);
      CHECK(c.active != c.inactive);
      CHECK(c.receptive != c.non_receptive);
    }
  }
  CHECK(reports > 300);

  ClassificationReport forged;
  forged.actor = "F";
  forged.communication.closed = true;
  forged.communication.non_receptive = true;
  forged.communication.undemanding = true;
  const auto v = check_report_lattice(forged);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "Lemma3.8");
}

TEST_CASE("behavioral classes transfer across related pairs") {
  testing::Rng rng(19);
  ActionCatalog catalog;
  std::vector<PairCase> pairs;
  for (int i = 0; i < 120; ++i) {
    const auto a = testing::random_actor(rng, "A" + std::to_string(i), 1 + testing::pick(rng, 4), 1 + testing::pick(rng, 3),
                                         1 + testing::pick(rng, 3), catalog);
    const auto b = testing::renamed_actor(rng, a, "B" + std::to_string(i), catalog);
    for (const auto rel : {PairRelation::dyn_equivalent, PairRelation::homological, PairRelation::dyn_homological}) {
      pairs.push_back({a, b, rel});
      pairs.push_back({a, a, rel});
    }
  }
  CHECK(check_preservation(pairs, catalog).empty());

  // Exact transport of react, proact and joint fixes every dependency class,
  // so any witness preserves them.
  const auto cat = small_catalog();
  const auto p = small_actor("P");
  CHECK(behavioral_class(p, cat) == Behavioral::primitive);
  CHECK(homological(p, small_actor("Q"), cat, IsoOptions{true}).has_value());
}

TEST_CASE("modeling consequences require the modeling axiom") {
  auto env = parse_spec(R"({"version": 1, "environment": "E",
      "actors": [{"name": "W", "components": ["P"]}, {"name": "P"}]})").env;
  CHECK_THROWS_AS(check_modeling_consequences(env), ConfigError);
  env.laws.ma = true;
  CHECK(check_modeling_consequences(env).empty());
  env.actors[0].parts.insert("gear");
  CHECK_FALSE(check_modeling_consequences(env).empty());
}
