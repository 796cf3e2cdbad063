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

#include "sam/model.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace sam {

namespace {

constexpr std::array<std::pair<std::string_view, RelationKind>, 6> kRelationKinds{{
    {"inner", RelationKind::inner},
    {"internal", RelationKind::internal},
    {"outer", RelationKind::outer},
    {"intermediate", RelationKind::intermediate},
    {"external", RelationKind::external},
    {"property", RelationKind::property},
}};

bool contains(const std::vector<std::string>& list, const std::string& x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

std::string pair_text(const std::pair<std::string, std::string>& p) {
  return p.first + "->" + p.second;
}

// Components plus parts, transitively through sub-actors.
std::set<std::string> own_parts(const Environment& env, const ActorSpec& actor) {
  std::set<std::string> out;
  std::vector<const ActorSpec*> stack{&actor};
  std::set<std::string> visited{actor.name};
  while (!stack.empty()) {
    const ActorSpec* at = stack.back();
    stack.pop_back();
    out.insert(at->parts.begin(), at->parts.end());
    for (const auto& c : at->components) {
      out.insert(c);
      if (!visited.insert(c).second) continue;
      if (const auto* sub = env.find(c)) stack.push_back(sub);
    }
  }
  out.erase(actor.name);
  return out;
}

void check_relation_kind(const Environment& env, const ActorSpec& actor, const RelationItem& r,
                         const std::set<std::string>& all_parts, const std::string& path,
                         ViolationList& out) {
  const auto own = own_parts(env, actor);
  std::size_t self = 0, parts = 0, foreign = 0, environment = 0;
  for (const auto& e : r.endpoints) {
    if (e == actor.name) {
      ++self;
    } else if (own.count(e)) {
      ++parts;
    } else if (e == env.name) {
      ++environment;
    } else if (env.find(e) || all_parts.count(e)) {
      ++foreign;
    } else {
      out.push_back({"relation.endpoint", path, "unknown endpoint '" + e + "'"});
      return;
    }
  }
  const std::size_t outside = foreign + environment;
  bool ok = true;
  switch (r.kind) {
    case RelationKind::inner:
      ok = parts > 0 && self == 0 && outside == 0;
      break;
    case RelationKind::internal:
      ok = self > 0 && parts > 0 && outside == 0;
      break;
    case RelationKind::outer:
      ok = self > 0 && outside > 0 && parts == 0;
      break;
    case RelationKind::intermediate:
      ok = self == 0 && parts > 0 && outside > 0;
      break;
    case RelationKind::external:
      ok = self > 0 && foreign > 0 && parts == 0;
      break;
    case RelationKind::property:
      ok = parts == 0 && outside == 0;
      break;
  }
  if (!ok) {
    out.push_back({"relation.kind", path,
                   "endpoints do not fit kind '" + std::string(to_string(r.kind)) + "'"});
  }
}

// Height in the part-whole forest where it is well defined: leaves and
// non-actor parts are 0, an actor whose children all share height h has h+1.
// Mixed or cyclic structure has no class.
std::optional<int> rank_class(const Environment& env, const ActorName& name,
                              std::map<ActorName, std::optional<int>>& memo,
                              std::set<ActorName>& active) {
  if (auto it = memo.find(name); it != memo.end()) return it->second;
  const ActorSpec* a = env.find(name);
  if (!a) return 0;
  if (!active.insert(name).second) return std::nullopt;
  std::optional<int> result;
  if (a->components.empty() && a->parts.empty()) {
    result = 0;
  } else {
    std::set<std::optional<int>> child;
    if (!a->parts.empty()) child.insert(0);
    for (const auto& c : a->components) child.insert(rank_class(env, c, memo, active));
    if (child.size() == 1 && *child.begin()) result = **child.begin() + 1;
  }
  active.erase(name);
  memo[name] = result;
  return result;
}

bool is_below(const Environment& env, const ActorName& low, const ActorName& high) {
  const ActorSpec* start = env.find(high);
  if (!start) return false;
  std::set<ActorName> seen;
  std::vector<const ActorSpec*> stack{start};
  while (!stack.empty()) {
    const ActorSpec* at = stack.back();
    stack.pop_back();
    for (const auto& c : at->components) {
      if (c == low) return true;
      if (!seen.insert(c).second) continue;
      if (const auto* sub = env.find(c)) stack.push_back(sub);
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(RelationKind k) {
  for (const auto& [name, value] : kRelationKinds) {
    if (value == k) return name;
  }
  return "?";
}

std::optional<RelationKind> relation_kind_from_string(std::string_view s) {
  for (const auto& [name, value] : kRelationKinds) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::set<std::string> images(const MultiRelation& relation, const std::string& key) {
  std::set<std::string> out;
  for (auto it = relation.lower_bound({key, std::string()});
       it != relation.end() && it->first == key; ++it) {
    out.insert(it->second);
  }
  return out;
}

MultiRelation restrict_domain(const MultiRelation& relation, const std::set<std::string>& domain) {
  MultiRelation out;
  for (const auto& p : relation) {
    if (domain.count(p.first)) out.insert(p);
  }
  return out;
}

// ActorSpec -------------------------------------------------------------------

std::set<std::string> ActorSpec::rel_ids() const {
  std::set<std::string> out;
  for (const auto& r : rel) out.insert(r.id);
  return out;
}

const RelationItem* ActorSpec::find_relation(const std::string& id) const {
  for (const auto& r : rel) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Marks ActorSpec::marks_of(const std::string& id) const {
  const auto it = marks.find(id);
  return it == marks.end() ? Marks{} : it->second;
}

ViolationList check_restrictions(const ActorSpec& base, const ExtendedRelations& extended) {
  ViolationList out;
  const auto restricted_react = restrict_domain(extended.vreact, base.trn);
  if (restricted_react != base.react) {
    std::string detail = "react differs from vreact restricted to trn";
    for (const auto& p : base.react) {
      if (!restricted_react.count(p)) detail += "; missing " + pair_text(p) + " in vreact";
    }
    for (const auto& p : restricted_react) {
      if (!base.react.count(p)) detail += "; extra " + pair_text(p) + " in vreact";
    }
    out.push_back({"Lemma3.14", "actors." + base.name + ".vreact", detail});
  }
  const auto restricted_proact = restrict_domain(extended.vproact, base.rel_ids());
  if (restricted_proact != base.proact) {
    std::string detail = "proact differs from vproact restricted to rel";
    for (const auto& p : base.proact) {
      if (!restricted_proact.count(p)) detail += "; missing " + pair_text(p) + " in vproact";
    }
    for (const auto& p : restricted_proact) {
      if (!base.proact.count(p)) detail += "; extra " + pair_text(p) + " in vproact";
    }
    out.push_back({"Lemma3.15", "actors." + base.name + ".vproact", detail});
  }
  return out;
}

ExtendedActorSpec ExtendedActorSpec::make(ActorSpec base, std::string env_name,
                                          MultiRelation vreact, MultiRelation vproact) {
  const auto broken = check_restrictions(base, ExtendedRelations{vreact, vproact});
  if (!broken.empty()) {
    std::string message = "extended actor '" + base.name + "':";
    for (const auto& v : broken) message += " " + v.rule + " " + v.detail + ";";
    throw Error(message);
  }
  ExtendedActorSpec out;
  out.base_ = std::move(base);
  out.env_name_ = std::move(env_name);
  out.vreact_ = std::move(vreact);
  out.vproact_ = std::move(vproact);
  return out;
}

// Environment -----------------------------------------------------------------

const ActorSpec* Environment::find(const ActorName& name) const {
  for (const auto& a : actors) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const ActorSpec& Environment::actor(const ActorName& name) const {
  if (const auto* a = find(name)) return *a;
  throw NameError("unknown actor '" + name + "'");
}

const CompositionOp* Environment::find_operator(const std::string& name) const {
  for (const auto& op : operators) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

const Action* Environment::find_action(const std::string& id) const {
  const auto it = actions.find(id);
  return it == actions.end() ? nullptr : &it->second;
}

ExtendedRelations Environment::extended_of(const ActorName& name) const {
  if (const auto it = extended.find(name); it != extended.end()) return it->second;
  const ActorSpec& a = actor(name);
  return ExtendedRelations{a.react, a.proact};
}

SyncGraph Environment::full_sync() const {
  SyncGraph out = sync;
  for (const auto& a : actors) {
    if (!out.has_clock(a.local_clock())) out.add_clock(Clock{a.local_clock(), a.name});
  }
  return out;
}

// Validation ------------------------------------------------------------------

ValidationReport validate_environment(const Environment& env) {
  ValidationReport report;
  auto& out = report.violations;

  if (env.name.empty()) out.push_back({"environment.name", "name", "empty environment name"});

  std::set<std::string> names;
  std::set<std::string> all_parts;
  for (const auto& a : env.actors) all_parts.insert(a.parts.begin(), a.parts.end());

  for (const auto& id : env.actp) {
    if (!env.actions.count(id)) out.push_back({"actp", "actp." + id, "action has no definition"});
  }
  for (const auto& id : env.trn) {
    if (!env.actp.count(id)) out.push_back({"trn", "trn." + id, "transaction not in actp"});
  }
  for (const auto& p : env.ereact) {
    if (!env.trn.count(p.first) || !env.actp.count(p.second)) {
      out.push_back({"ereact", "ereact[" + pair_text(p) + "]", "pair outside trn x actp"});
    }
  }
  for (const auto& p : env.eproact) {
    if (!env.relp.count(p.first) || !env.actp.count(p.second)) {
      out.push_back({"eproact", "eproact[" + pair_text(p) + "]", "pair outside relp x actp"});
    }
  }

  std::set<std::string> op_names;
  for (const auto& op : env.operators) {
    if (!op_names.insert(op.name).second) {
      out.push_back({"operator", "operators." + op.name, "duplicate operator"});
    }
    if (op.arity == 0) out.push_back({"operator.arity", "operators." + op.name, "arity must be >= 1"});
  }

  for (const auto& [id, action] : env.actions) {
    if (const auto& send = action.attributes().send) {
      const std::string path = "actions." + id + ".send";
      const ActorSpec* target = env.find(send->target);
      if (!target) {
        out.push_back({"send.target", path, "unknown target '" + send->target + "'"});
      } else if (!target->trn.count(send->transaction)) {
        out.push_back({"send.transaction", path,
                       "'" + send->transaction + "' is not a transaction of " + send->target});
      }
    }
  }
  for (const auto& m : env.modalities) {
    if (!env.actions.count(m.action)) {
      out.push_back({"modality", "modalities." + m.action, "unknown action"});
    }
  }

  for (const auto& a : env.actors) {
    const std::string base = "actors." + a.name;
    if (a.name.empty()) out.push_back({"actor.name", base, "empty actor name"});
    if (!names.insert(a.name).second) out.push_back({"actor.name", base, "duplicate actor name"});
    if (a.name == env.name) out.push_back({"actor.name", base, "actor shadows the environment"});

    std::set<std::string> rel_ids;
    for (const auto& r : a.rel) {
      const std::string path = base + ".rel." + r.id;
      if (!rel_ids.insert(r.id).second) out.push_back({"rel.id", path, "duplicate relation id"});
      if (!env.relp.count(r.id)) out.push_back({"relp", path, "relation not in relp"});
      check_relation_kind(env, a, r, all_parts, path, out);
    }
    for (const auto& id : a.act) {
      if (!env.actp.count(id)) out.push_back({"actp", base + ".act." + id, "action not in actp"});
    }
    for (const auto& id : a.trn) {
      if (!env.actp.count(id)) out.push_back({"actp", base + ".trn." + id, "transaction not in actp"});
    }
    for (const auto& p : a.react) {
      if (!a.trn.count(p.first) || !a.act.count(p.second)) {
        out.push_back({"react", base + ".react[" + pair_text(p) + "]", "pair outside trn x act"});
      }
    }
    for (const auto& p : a.proact) {
      if (!rel_ids.count(p.first) || !a.act.count(p.second)) {
        out.push_back({"proact", base + ".proact[" + pair_text(p) + "]", "pair outside rel x act"});
      }
    }
    for (const auto& j : a.joint) {
      if (!a.trn.count(j.trn) || !rel_ids.count(j.rel) || !a.act.count(j.act)) {
        out.push_back({"combact", base + ".combact[" + j.trn + "," + j.rel + "->" + j.act + "]",
                       "triple outside trn x rel x act"});
      }
    }
    for (const auto& n : a.facq) {
      if (!env.find(n)) out.push_back({"facq", base + ".facq." + n, "unknown actor"});
    }
    for (const auto& n : a.bacq) {
      if (!env.find(n)) out.push_back({"bacq", base + ".bacq." + n, "unknown actor"});
    }
    for (const auto& c : a.components) {
      if (c == a.name) {
        out.push_back({"components", base + ".components." + c, "actor is its own component"});
      } else if (!env.find(c)) {
        out.push_back({"components", base + ".components." + c, "component is not a registered actor"});
      }
    }
    for (const auto& p : a.parts) {
      if (env.find(p)) {
        out.push_back({"parts", base + ".parts." + p, "registered actor listed as a non-actor part"});
      }
    }
    if (!a.clock.empty() && !env.sync.has_clock(a.clock)) {
      out.push_back({"clock", base + ".clock", "unknown clock '" + a.clock + "'"});
    }
    for (const auto& [id, m] : a.marks) {
      if (!rel_ids.count(id) && !a.act.count(id) && !a.trn.count(id)) {
        out.push_back({"marks", base + ".marks." + id, "mark on an unknown element"});
      }
    }
  }

  // Component forest must be acyclic.
  for (const auto& a : env.actors) {
    if (is_below(env, a.name, a.name)) {
      out.push_back({"components.cycle", "actors." + a.name + ".components",
                     "actor is reachable from its own components"});
    }
  }

  for (const auto& [name, ext] : env.extended) {
    const ActorSpec* a = env.find(name);
    const std::string base = "extended." + name;
    if (!a) {
      out.push_back({"extended", base, "unknown actor"});
      continue;
    }
    for (const auto& p : ext.vreact) {
      if (!env.actp.count(p.first) || !a->act.count(p.second)) {
        out.push_back({"vreact", base + ".vreact[" + pair_text(p) + "]", "pair outside actp x act"});
      }
    }
    for (const auto& p : ext.vproact) {
      if (!env.relp.count(p.first) || !a->act.count(p.second)) {
        out.push_back({"vproact", base + ".vproact[" + pair_text(p) + "]", "pair outside relp x act"});
      }
    }
    for (auto& v : check_restrictions(*a, ext)) out.push_back(std::move(v));
  }

  for (auto& v : env.sync.check_consistency()) out.push_back(std::move(v));

  if (!out.empty()) return report;

  // Asserted laws, routed by policy.
  auto& law_sink = env.laws.policy == LawConfig::Policy::reject ? report.violations : report.warnings;
  auto route = [&](const ViolationList& found) {
    law_sink.insert(law_sink.end(), found.begin(), found.end());
  };
  if (env.laws.sm) route(check_send_axiom(env));
  if (env.laws.rm) route(check_receive_axiom(env));
  if (env.laws.ca) route(check_connectivity(env));
  if (env.laws.ea) {
    for (const auto& op : env.operators) {
      if (!op.ea_compliant) {
        law_sink.push_back({"EA", "operators." + op.name, "operator is not EA-compliant"});
      }
    }
  }
  if (env.laws.ma && !env.domain.objects.empty()) {
    route(check_modeling_axiom(env, env.domain.objects, env.domain.model).witnesses);
  }
  return report;
}

// Messaging -------------------------------------------------------------------

bool can_send(const Environment& env, const ActorName& a, const ActorName& c) {
  const ActorSpec& sender = env.actor(a);
  env.actor(c);
  return contains(sender.facq, c);
}

bool can_receive(const Environment& env, const ActorName& c, const ActorName& a) {
  env.actor(c);
  return contains(env.actor(a).bacq, c);
}

ViolationList check_connectivity(const Environment& env) {
  ViolationList out;
  for (const auto& a : env.actors) {
    for (const auto& c : env.actors) {
      const bool forward = contains(a.facq, c.name);
      const bool backward = contains(c.bacq, a.name);
      if (forward != backward) {
        out.push_back({"CA", "(" + a.name + "," + c.name + ")",
                       forward ? c.name + " in FAcq(" + a.name + ") but " + a.name +
                                     " not in BAcq(" + c.name + ")"
                               : a.name + " in BAcq(" + c.name + ") but " + c.name +
                                     " not in FAcq(" + a.name + ")"});
      }
    }
  }
  return out;
}

std::set<ActorName> friends(const Environment& env, const ActorName& a) {
  const ActorSpec& actor = env.actor(a);
  std::set<ActorName> out;
  for (const auto& f : actor.facq) {
    if (contains(actor.bacq, f)) out.insert(f);
  }
  return out;
}

ViolationList check_send_axiom(const Environment& env) {
  ViolationList out;
  for (const auto& a : env.actors) {
    for (const auto& id : a.act) {
      const Action* action = env.find_action(id);
      if (!action || !action->attributes().send) continue;
      const auto& target = action->attributes().send->target;
      if (!contains(a.facq, target)) {
        out.push_back({"SM", "actors." + a.name + ".act." + id,
                       a.name + " sends to " + target + " which is not a forward acquaintance"});
      }
    }
  }
  return out;
}

ViolationList check_receive_axiom(const Environment& env) {
  ViolationList out;
  for (const auto& a : env.actors) {
    for (const auto& id : a.act) {
      const Action* action = env.find_action(id);
      if (!action || !action->attributes().send) continue;
      const auto& target = action->attributes().send->target;
      const ActorSpec* c = env.find(target);
      if (c && !contains(c->bacq, a.name)) {
        out.push_back({"RM", "actors." + target + ".bacq",
                       target + " would receive from " + a.name + " (via " + id +
                           ") which is not a backward acquaintance"});
      }
    }
  }
  return out;
}

// Rank ------------------------------------------------------------------------

std::string_view to_string(RankOrder r) {
  switch (r) {
    case RankOrder::lower: return "lower";
    case RankOrder::equal: return "equal";
    case RankOrder::higher: return "higher";
    case RankOrder::incomparable: return "incomparable";
  }
  return "?";
}

RankOrder rank_compare(const Environment& env, const ActorName& a, const ActorName& b) {
  const bool a_is_env = a == env.name;
  const bool b_is_env = b == env.name;
  if (!a_is_env) env.actor(a);
  if (!b_is_env) env.actor(b);
  if (a_is_env && b_is_env) return RankOrder::equal;
  if (a_is_env) return RankOrder::higher;
  if (b_is_env) return RankOrder::lower;

  if (a != b) {
    if (is_below(env, a, b)) return RankOrder::lower;
    if (is_below(env, b, a)) return RankOrder::higher;
  }
  std::map<ActorName, std::optional<int>> memo;
  std::set<ActorName> active;
  const auto ra = rank_class(env, a, memo, active);
  const auto rb = rank_class(env, b, memo, active);
  if (ra && rb && *ra == *rb) return RankOrder::equal;
  return RankOrder::incomparable;
}

// Domains ---------------------------------------------------------------------

CheckResult check_domain_embedding(const Environment& env_e, const Environment& env_d,
                                   const std::map<ActorName, ActorName>& mapping) {
  CheckResult result;
  std::map<ActorName, ActorName> used;
  for (const auto& d : env_d.actors) {
    const auto it = mapping.find(d.name);
    if (it == mapping.end()) {
      result.witnesses.push_back({"Prop3.32.missing", d.name, "actor of D has no image"});
      continue;
    }
    if (!env_e.find(it->second)) {
      result.witnesses.push_back({"Prop3.32.target", d.name,
                                  "image '" + it->second + "' is not an actor of E"});
      continue;
    }
    const auto [prev, inserted] = used.emplace(it->second, d.name);
    if (!inserted) {
      result.witnesses.push_back({"Prop3.32.collision", d.name,
                                  "shares image '" + it->second + "' with " + prev->second});
    }
  }
  result.ok = result.witnesses.empty();
  return result;
}

CheckResult check_modeling_axiom(const Environment& env, const std::vector<std::string>& objects,
                                 const std::map<std::string, ActorName>& model_map) {
  CheckResult result;
  for (const auto& o : objects) {
    const auto it = model_map.find(o);
    if (it == model_map.end()) {
      result.witnesses.push_back({"MA", o, "domain object is not modeled by an actor"});
    } else if (!env.find(it->second)) {
      result.witnesses.push_back({"MA", o, "modeled by unregistered actor '" + it->second + "'"});
    }
  }
  result.ok = result.witnesses.empty();
  return result;
}

}  // namespace sam
