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

#include "sam/equivalence.hpp"

#include <algorithm>
#include <functional>

#include "sam/combact.hpp"

namespace sam {

namespace {

bool is_void_id(const ActionCatalog& catalog, const std::string& id) {
  const auto it = catalog.find(id);
  return it != catalog.end() && it->second.is_void();
}

std::vector<RelationItem> sorted_relations(std::vector<RelationItem> rel) {
  std::sort(rel.begin(), rel.end(), [](const RelationItem& x, const RelationItem& y) {
    return x.id < y.id;
  });
  return rel;
}

// The components an isomorphism must match, with a per-element profile used
// to prune candidates.
struct IsoView {
  std::vector<std::string> acts;
  std::vector<std::string> trns;
  std::vector<std::string> rels;
  MultiRelation react;
  MultiRelation proact;
  std::set<JointDependence> joint;
  std::map<std::string, std::string> act_profile;
  std::map<std::string, std::string> trn_profile;
  std::map<std::string, std::string> rel_profile;
};

IsoView make_view(const ActorSpec& actor, const ActionCatalog& catalog, IsoScope scope,
                  IsoOptions options) {
  IsoView v;
  if (scope == IsoScope::structural) {
    v.acts.assign(actor.act.begin(), actor.act.end());
    v.trns.assign(actor.trn.begin(), actor.trn.end());
    for (const auto& r : sorted_relations(actor.rel)) v.rels.push_back(r.id);
    v.react = actor.react;
    v.proact = actor.proact;
    v.joint = actor.joint;
  } else {
    const auto n = void_normalized(actor, catalog);
    v.acts.assign(n.act.begin(), n.act.end());
    v.trns.assign(n.trn.begin(), n.trn.end());
    std::set<std::string> used;
    for (const auto& p : n.proact) used.insert(p.first);
    for (const auto& j : n.joint) used.insert(j.rel);
    v.rels.assign(used.begin(), used.end());
    v.react = n.react;
    v.proact = n.proact;
    v.joint = n.joint;
  }

  auto count = [](auto&& range, auto&& pred) {
    return std::to_string(std::count_if(range.begin(), range.end(), pred));
  };
  for (const auto& a : v.acts) {
    std::string p = is_void_id(catalog, a) ? "v" : "p";
    if (options.preserve_dependency) p += std::string(to_string(classify_dependency(actor, a)));
    p += "|" + count(v.react, [&](const auto& x) { return x.second == a; });
    p += "|" + count(v.proact, [&](const auto& x) { return x.second == a; });
    p += "|" + count(v.joint, [&](const auto& x) { return x.act == a; });
    v.act_profile[a] = p;
  }
  for (const auto& t : v.trns) {
    v.trn_profile[t] = count(v.react, [&](const auto& x) { return x.first == t; }) + "|" +
                       count(v.joint, [&](const auto& x) { return x.trn == t; });
  }
  for (const auto& r : v.rels) {
    std::string p;
    if (scope == IsoScope::structural) p = std::string(to_string(actor.find_relation(r)->kind));
    p += "|" + count(v.proact, [&](const auto& x) { return x.first == r; });
    p += "|" + count(v.joint, [&](const auto& x) { return x.rel == r; });
    v.rel_profile[r] = p;
  }
  return v;
}

std::multiset<std::string> profile_bag(const std::map<std::string, std::string>& profiles) {
  std::multiset<std::string> out;
  for (const auto& [_, p] : profiles) out.insert(p);
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const IsoView& a, const IsoView& b) : a_(a), b_(b) {}

  std::optional<ComponentIsomorphism> run(IsoScope scope) {
    if (a_.acts.size() != b_.acts.size() || a_.trns.size() != b_.trns.size() ||
        a_.rels.size() != b_.rels.size() || a_.react.size() != b_.react.size() ||
        a_.proact.size() != b_.proact.size() || a_.joint.size() != b_.joint.size()) {
      return std::nullopt;
    }
    if (profile_bag(a_.act_profile) != profile_bag(b_.act_profile) ||
        profile_bag(a_.trn_profile) != profile_bag(b_.trn_profile) ||
        profile_bag(a_.rel_profile) != profile_bag(b_.rel_profile)) {
      return std::nullopt;
    }
    for (const auto& x : a_.acts) slots_.push_back({Slot::act, x});
    for (const auto& x : a_.trns) slots_.push_back({Slot::trn, x});
    for (const auto& x : a_.rels) slots_.push_back({Slot::rel, x});
    if (!extend(0)) return std::nullopt;
    ComponentIsomorphism iso;
    iso.scope = scope;
    iso.act_map = maps_[Slot::act];
    iso.trn_map = maps_[Slot::trn];
    iso.rel_map = maps_[Slot::rel];
    return iso;
  }

 private:
  enum Slot { act = 0, trn = 1, rel = 2 };

  const std::vector<std::string>& targets(Slot s) const {
    return s == act ? b_.acts : s == trn ? b_.trns : b_.rels;
  }
  const std::string& profile(const IsoView& v, Slot s, const std::string& x) const {
    return (s == act ? v.act_profile : s == trn ? v.trn_profile : v.rel_profile).at(x);
  }

  const std::string* image(Slot s, const std::string& x) const {
    const auto it = maps_[s].find(x);
    return it == maps_[s].end() ? nullptr : &it->second;
  }

  // Every fully assigned pair of A must land in B.
  bool consistent() const {
    for (const auto& [t, x] : a_.react) {
      const auto* mt = image(trn, t);
      const auto* mx = image(act, x);
      if (mt && mx && !b_.react.count({*mt, *mx})) return false;
    }
    for (const auto& [r, x] : a_.proact) {
      const auto* mr = image(rel, r);
      const auto* mx = image(act, x);
      if (mr && mx && !b_.proact.count({*mr, *mx})) return false;
    }
    for (const auto& j : a_.joint) {
      const auto* mt = image(trn, j.trn);
      const auto* mr = image(rel, j.rel);
      const auto* mx = image(act, j.act);
      if (mt && mr && mx && !b_.joint.count({*mt, *mr, *mx})) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == slots_.size()) return true;
    const auto& [slot, x] = slots_[k];
    for (const auto& y : targets(slot)) {
      if (used_[slot].count(y) || profile(a_, slot, x) != profile(b_, slot, y)) continue;
      maps_[slot][x] = y;
      used_[slot].insert(y);
      if (consistent() && extend(k + 1)) return true;
      maps_[slot].erase(x);
      used_[slot].erase(y);
    }
    return false;
  }

  const IsoView& a_;
  const IsoView& b_;
  std::vector<std::pair<Slot, std::string>> slots_;
  std::map<std::string, std::string> maps_[3];
  std::set<std::string> used_[3];
};

bool is_bijection(const std::map<std::string, std::string>& m, const std::vector<std::string>& from,
                  const std::vector<std::string>& to) {
  if (m.size() != from.size() || from.size() != to.size()) return false;
  std::set<std::string> images;
  for (const auto& x : from) {
    const auto it = m.find(x);
    if (it == m.end()) return false;
    if (std::find(to.begin(), to.end(), it->second) == to.end()) return false;
    images.insert(it->second);
  }
  return images.size() == to.size();
}

}  // namespace

ActionComponents void_normalized(const ActorSpec& actor, const ActionCatalog& catalog) {
  ActionComponents out;
  out.trn = actor.trn;
  for (const auto& a : actor.act) {
    if (!is_void_id(catalog, a)) out.act.insert(a);
  }
  for (const auto& p : actor.react) {
    if (!is_void_id(catalog, p.second)) out.react.insert(p);
  }
  for (const auto& p : actor.proact) {
    if (!is_void_id(catalog, p.second)) out.proact.insert(p);
  }
  for (const auto& j : actor.joint) {
    if (!is_void_id(catalog, j.act)) out.joint.insert(j);
  }
  return out;
}

bool identical(const ActorSpec& a, const ActorSpec& b) {
  return sorted_relations(a.rel) == sorted_relations(b.rel) && a.act == b.act && a.trn == b.trn &&
         a.react == b.react && a.proact == b.proact && a.joint == b.joint;
}

bool dyn_equivalent(const ActorSpec& a, const ActorSpec& b, const ActionCatalog& catalog) {
  return void_normalized(a, catalog) == void_normalized(b, catalog);
}

std::optional<ComponentIsomorphism> homological(const ActorSpec& a, const ActorSpec& b,
                                                const ActionCatalog& catalog, IsoOptions options) {
  const auto va = make_view(a, catalog, IsoScope::structural, options);
  const auto vb = make_view(b, catalog, IsoScope::structural, options);
  return IsoSearch(va, vb).run(IsoScope::structural);
}

std::optional<ComponentIsomorphism> dyn_homological(const ActorSpec& a, const ActorSpec& b,
                                                    const ActionCatalog& catalog,
                                                    IsoOptions options) {
  const auto va = make_view(a, catalog, IsoScope::dynamic, options);
  const auto vb = make_view(b, catalog, IsoScope::dynamic, options);
  return IsoSearch(va, vb).run(IsoScope::dynamic);
}

bool is_witness(const ActorSpec& a, const ActorSpec& b, const ComponentIsomorphism& iso,
                const ActionCatalog& catalog, IsoOptions options) {
  const auto va = make_view(a, catalog, iso.scope, options);
  const auto vb = make_view(b, catalog, iso.scope, options);
  if (!is_bijection(iso.act_map, va.acts, vb.acts) || !is_bijection(iso.trn_map, va.trns, vb.trns) ||
      !is_bijection(iso.rel_map, va.rels, vb.rels)) {
    return false;
  }
  for (const auto& [x, y] : iso.act_map) {
    if (is_void_id(catalog, x) != is_void_id(catalog, y)) return false;
    if (options.preserve_dependency && classify_dependency(a, x) != classify_dependency(b, y)) {
      return false;
    }
  }
  if (iso.scope == IsoScope::structural) {
    for (const auto& [x, y] : iso.rel_map) {
      if (a.find_relation(x)->kind != b.find_relation(y)->kind) return false;
    }
  }
  MultiRelation react, proact;
  std::set<JointDependence> joint;
  for (const auto& [t, x] : va.react) react.emplace(iso.trn_map.at(t), iso.act_map.at(x));
  for (const auto& [r, x] : va.proact) proact.emplace(iso.rel_map.at(r), iso.act_map.at(x));
  for (const auto& j : va.joint) {
    joint.insert({iso.trn_map.at(j.trn), iso.rel_map.at(j.rel), iso.act_map.at(j.act)});
  }
  return react == vb.react && proact == vb.proact && joint == vb.joint;
}

// Classification --------------------------------------------------------------

std::string_view to_string(Behavioral b) {
  switch (b) {
    case Behavioral::primitive: return "primitive";
    case Behavioral::automatic: return "automatic";
    case Behavioral::general: return "general";
  }
  return "?";
}

Behavioral behavioral_class(const ActorSpec& actor, const ActionCatalog& catalog) {
  bool all_primitive = true;
  bool all_automatic = true;
  for (const auto& id : actor.act) {
    if (is_void_id(catalog, id)) continue;
    const Dependency d = classify_dependency(actor, id);
    all_primitive = all_primitive && d == Dependency::primitive;
    all_automatic = all_automatic && is_automatic(d);
  }
  if (all_primitive) return Behavioral::primitive;
  if (all_automatic) return Behavioral::automatic;
  return Behavioral::general;
}

ClassificationReport classify(const ActorSpec& actor, const Environment& env) {
  env.actor(actor.name);
  ClassificationReport r;
  r.actor = actor.name;
  r.behavioral = behavioral_class(actor, env.actions);

  r.structural.prime = actor.components.empty() && actor.parts.empty();
  r.structural.primitive = actor.components.empty();
  r.structural.composite = !r.structural.prime;
  r.structural.compound = !actor.components.empty();

  bool sends = false, requests = false, receives = false;
  for (const auto& id : actor.act) {
    const Action* a = env.find_action(id);
    if (!a || a->is_void() || !a->attributes().send) continue;
    sends = true;
    requests = requests || a->attributes().send->request;
  }
  for (const auto& id : actor.trn) {
    const Action* a = env.find_action(id);
    receives = receives || (a && a->attributes().receive);
  }
  auto& c = r.communication;
  c.active = sends;
  c.inactive = !sends;
  c.receptive = receives;
  c.non_receptive = !receives;
  c.closed = !sends && !receives;
  c.open = sends && receives;
  c.undemanding = !requests;

  for (const auto& other : env.actors) {
    if (other.components.count(actor.name)) r.primary = false;
  }
  return r;
}

ClassificationReport classify(const ActorName& actor, const Environment& env) {
  return classify(env.actor(actor), env);
}

ViolationList check_report_lattice(const ClassificationReport& report) {
  ViolationList out;
  const auto& c = report.communication;
  auto require = [&](bool premise, bool conclusion, const char* rule, const char* text) {
    if (premise && !conclusion) out.push_back({rule, "actors." + report.actor, text});
  };
  require(c.closed, c.inactive, "Lemma3.8", "closed but not inactive");
  require(c.closed, c.non_receptive, "Lemma3.9", "closed but not non-receptive");
  require(c.non_receptive && c.inactive, c.closed, "Lemma3.10", "non-receptive and inactive but not closed");
  require(c.open, c.active, "Lemma3.11", "open but not active");
  require(c.receptive && c.active, c.open, "Lemma3.12", "receptive and active but not open");
  require(c.inactive, c.undemanding, "Lemma3.13", "inactive but not undemanding");
  require(c.closed, c.undemanding, "Cor3.3", "closed but not undemanding");
  require(report.behavioral == Behavioral::primitive,
          report.behavioral == Behavioral::primitive || report.behavioral == Behavioral::automatic,
          "Cor3.1", "behaviorally primitive but not automatic");
  const auto& s = report.structural;
  require(s.prime, s.primitive, "structure", "prime but not primitive");
  require(s.compound, s.composite, "structure", "compound but not composite");
  return out;
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::identical: return "identical";
    case PairRelation::dyn_equivalent: return "dyn-equivalent";
    case PairRelation::homological: return "homological";
    case PairRelation::dyn_homological: return "dyn-homological";
  }
  return "?";
}

std::optional<PairRelation> pair_relation_from_string(std::string_view s) {
  for (auto r : {PairRelation::identical, PairRelation::dyn_equivalent, PairRelation::homological,
                 PairRelation::dyn_homological}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

bool related(const ActorSpec& a, const ActorSpec& b, PairRelation relation,
             const ActionCatalog& catalog) {
  const IsoOptions preserving{.preserve_dependency = true};
  switch (relation) {
    case PairRelation::identical: return identical(a, b);
    case PairRelation::dyn_equivalent: return dyn_equivalent(a, b, catalog);
    case PairRelation::homological: return homological(a, b, catalog, preserving).has_value();
    case PairRelation::dyn_homological: return dyn_homological(a, b, catalog, preserving).has_value();
  }
  return false;
}

ViolationList check_preservation(std::span<const PairCase> pairs, const ActionCatalog& catalog) {
  static const std::map<PairRelation, std::pair<const char*, const char*>> kRules{
      {PairRelation::identical, {"Lemma3.1", "Lemma3.1"}},
      {PairRelation::dyn_equivalent, {"Prop3.26", "Prop3.27"}},
      {PairRelation::homological, {"Prop3.28", "Prop3.29"}},
      {PairRelation::dyn_homological, {"Prop3.30", "Prop3.31"}},
  };
  ViolationList out;
  for (const auto& pc : pairs) {
    if (!related(pc.a, pc.b, pc.relation, catalog)) continue;
    const Behavioral ba = behavioral_class(pc.a, catalog);
    const Behavioral bb = behavioral_class(pc.b, catalog);
    const auto [primitive_rule, automatic_rule] = kRules.at(pc.relation);
    const std::string path = "(" + pc.a.name + "," + pc.b.name + ")";
    if ((ba == Behavioral::primitive) != (bb == Behavioral::primitive)) {
      out.push_back({primitive_rule, path,
                     std::string(to_string(pc.relation)) + " pair disagrees on behavioral primitiveness"});
    }
    if ((ba != Behavioral::general) != (bb != Behavioral::general)) {
      out.push_back({automatic_rule, path,
                     std::string(to_string(pc.relation)) + " pair disagrees on behavioral automaticity"});
    }
  }
  return out;
}

ViolationList check_modeling_consequences(const Environment& env) {
  if (!env.laws.ma) throw ConfigError("Modeling Axiom is not asserted for " + env.name);
  ViolationList out;
  for (const auto& a : env.actors) {
    const std::string base = "actors." + a.name;
    for (const auto& p : a.parts) {
      out.push_back({"Cor3.2", base + ".parts." + p, "part is not modeled by an actor"});
    }
    if (!a.parts.empty() && a.components.empty()) {
      out.push_back({"Prop3.33a", base, "structurally primitive but not prime"});
      out.push_back({"Prop3.33b", base, "structurally composite but not compound"});
    }
  }
  return out;
}

}  // namespace sam
