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

#include "sam/combact.hpp"

#include <string>
#include <vector>

namespace sam {

namespace {

// Owned ids whose catalog term is `action`.
std::vector<std::string> owned_ids(const ActorSpec& actor, const Action& action, const ActionCatalog& catalog) {
  std::vector<std::string> out;
  for (const auto& id : actor.act) {
    const auto it = catalog.find(id);
    if (it != catalog.end() ? same_term(it->second, action)
                            : action.kind() == Action::Kind::atomic && action.name() == id) {
      out.push_back(id);
    }
  }
  return out;
}

Dependency classify_ids(const ActorSpec& actor, const std::vector<std::string>& ids) {
  bool reactive = false, proactive = false, joint = false;
  for (const auto& id : ids) {
    for (const auto& p : actor.react) reactive = reactive || p.second == id;
    for (const auto& p : actor.proact) proactive = proactive || p.second == id;
    for (const auto& j : actor.joint) joint = joint || j.act == id;
  }
  if (joint || (reactive && proactive)) return Dependency::automatic;
  if (reactive || proactive) return Dependency::primitive;
  return Dependency::unclassified;
}

}  // namespace

Combact build_combact(const ActorSpec& actor) {
  Combact out;
  for (const auto& [t, a] : actor.react) out.insert({t, std::nullopt, a});
  for (const auto& [r, a] : actor.proact) out.insert({std::nullopt, r, a});
  for (const auto& j : actor.joint) out.insert({j.trn, j.rel, j.act});
  return out;
}

MultiRelation react_of(const Combact& combact) {
  MultiRelation out;
  for (const auto& e : combact) {
    if (e.trn && !e.rel) out.emplace(*e.trn, e.act);
  }
  return out;
}

MultiRelation proact_of(const Combact& combact) {
  MultiRelation out;
  for (const auto& e : combact) {
    if (e.rel && !e.trn) out.emplace(*e.rel, e.act);
  }
  return out;
}

Dependency classify_dependency(const ActorSpec& actor, const std::string& action_id) {
  if (!actor.act.count(action_id)) {
    throw OwnershipError("action '" + action_id + "' is not an action of " + actor.name);
  }
  return classify_ids(actor, {action_id});
}

Dependency classify_dependency(const ActorSpec& actor, const Action& action,
                               const ActionCatalog& catalog) {
  if (action.is_negation()) {
    const Action& inner = action.parts().front();
    if (!owned_ids(actor, inner, catalog).empty()) return classify_dependency(actor, inner, catalog);
  }
  const auto ids = owned_ids(actor, action, catalog);
  if (ids.empty()) {
    throw OwnershipError("action '" + action.to_string() + "' is not an action of " + actor.name);
  }
  return classify_ids(actor, ids);
}

}  // namespace sam
