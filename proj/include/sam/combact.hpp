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

#pragma once

#include <optional>
#include <set>
#include <string>

#include "sam/action.hpp"
#include "sam/model.hpp"

namespace sam {

/// One entry of Combact: (transaction or void, relation or void) -> action.
struct CombactEntry {
  std::optional<std::string> trn;
  std::optional<std::string> rel;
  std::string act;

  friend auto operator<=>(const CombactEntry&, const CombactEntry&) = default;
};

using Combact = std::set<CombactEntry>;

/// Pads react onto (t, void), proact onto (void, r), and adds the actor's
/// joint dependences on both axes.
Combact build_combact(const ActorSpec& actor);

/// Combact restricted to a void relation axis, as a trn -> act relation.
MultiRelation react_of(const Combact& combact);
/// Combact restricted to a void transaction axis, as a rel -> act relation.
MultiRelation proact_of(const Combact& combact);

/// Primitive: the action is an image of react only or of proact only.
/// Automatic: it is an image on both axes, or of a joint dependence.
/// Throws OwnershipError if `action_id` is not in the actor's act.
Dependency classify_dependency(const ActorSpec& actor, const std::string& action_id);

/// Term-level variant. Owned ids sharing the term count as one action; an
/// inaction takes the class of the action it negates when that is owned.
Dependency classify_dependency(const ActorSpec& actor, const Action& action,
                               const ActionCatalog& catalog);

/// Primitive and automatic actions both count as automatic.
inline bool is_automatic(Dependency d) {
  return d == Dependency::primitive || d == Dependency::automatic;
}

}  // namespace sam
