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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sam/action.hpp"
#include "sam/error.hpp"
#include "sam/temporal.hpp"

namespace sam {

using ActorName = std::string;

enum class RelationKind { inner, internal, outer, intermediate, external, property };

std::string_view to_string(RelationKind k);
std::optional<RelationKind> relation_kind_from_string(std::string_view s);

struct RelationItem {
  std::string id;
  RelationKind kind = RelationKind::property;
  /// Actor names, part identifiers, or the environment name.
  std::vector<std::string> endpoints;

  friend bool operator==(const RelationItem&, const RelationItem&) = default;
};

struct Marks {
  bool actualized = true;
  bool acknowledged = true;

  friend bool operator==(const Marks&, const Marks&) = default;
};

/// Finite multivalued relation as a set of (domain, image) pairs.
using MultiRelation = std::set<std::pair<std::string, std::string>>;

std::set<std::string> images(const MultiRelation& relation, const std::string& key);
MultiRelation restrict_domain(const MultiRelation& relation, const std::set<std::string>& domain);

/// A combined action that depends on both a transaction and a relation.
struct JointDependence {
  std::string trn;
  std::string rel;
  std::string act;

  friend auto operator<=>(const JointDependence&, const JointDependence&) = default;
};

/// The actor tuple (Rel, Act, Trn; React, Proact) with acquaintances and
/// part-whole structure.
struct ActorSpec {
  ActorName name;
  std::vector<RelationItem> rel;
  std::set<std::string> act;
  std::set<std::string> trn;
  MultiRelation react;
  MultiRelation proact;
  std::set<JointDependence> joint;
  std::vector<ActorName> facq;
  std::vector<ActorName> bacq;
  /// Sub-actors, all registered in the same environment.
  std::set<ActorName> components;
  /// Parts and elements that are not themselves registered actors.
  std::set<std::string> parts;
  /// Local clock id; empty means a clock named after the actor.
  std::string clock;
  /// Per-element marks keyed by relation or action id. Unlisted elements are
  /// actualized and acknowledged.
  std::map<std::string, Marks> marks;

  std::set<std::string> rel_ids() const;
  const RelationItem* find_relation(const std::string& id) const;
  Marks marks_of(const std::string& id) const;
  const std::string& local_clock() const { return clock.empty() ? name : clock; }

  friend bool operator==(const ActorSpec&, const ActorSpec&) = default;
};

/// Virtual reaction/proaction functions over the environment universes.
struct ExtendedRelations {
  MultiRelation vreact;
  MultiRelation vproact;

  friend bool operator==(const ExtendedRelations&, const ExtendedRelations&) = default;
};

/// Extended representation (A, E). The factory guarantees that react and
/// proact are the restrictions of vreact and vproact to trn and rel.
class ExtendedActorSpec {
 public:
  /// Throws Error when the restriction laws fail.
  static ExtendedActorSpec make(ActorSpec base, std::string env_name, MultiRelation vreact,
                                MultiRelation vproact);

  const ActorSpec& base() const { return base_; }
  const std::string& env_name() const { return env_name_; }
  const MultiRelation& vreact() const { return vreact_; }
  const MultiRelation& vproact() const { return vproact_; }

 private:
  ExtendedActorSpec() = default;

  ActorSpec base_;
  std::string env_name_;
  MultiRelation vreact_;
  MultiRelation vproact_;
};

/// Witnesses for react != vreact|trn and proact != vproact|rel.
ViolationList check_restrictions(const ActorSpec& base, const ExtendedRelations& extended);

struct LawConfig {
  enum class Policy { reject, warn };

  bool sm = true;
  bool rm = true;
  bool ca = false;
  bool ea = true;
  bool ma = false;
  Policy policy = Policy::reject;

  friend bool operator==(const LawConfig&, const LawConfig&) = default;
};

/// Objects of the modeled domain and the actors that model them.
struct DomainModel {
  std::vector<std::string> objects;
  std::map<std::string, ActorName> model;

  friend bool operator==(const DomainModel&, const DomainModel&) = default;
};

/// The top-rank system (Relp, Actp, Trn; EReact, EProact) with its actors.
struct Environment {
  std::string name = "E";
  std::vector<ActorSpec> actors;
  std::set<std::string> relp;
  std::set<std::string> actp;
  std::set<std::string> trn;
  MultiRelation ereact;
  MultiRelation eproact;
  std::vector<CompositionOp> operators;
  ActionCatalog actions;
  std::set<ModalityAssertion> modalities;
  SyncGraph sync;
  /// Extended representations by actor; absent actors use react/proact.
  std::map<ActorName, ExtendedRelations> extended;
  LawConfig laws;
  DomainModel domain;

  const ActorSpec* find(const ActorName& name) const;
  /// Throws NameError for unregistered names.
  const ActorSpec& actor(const ActorName& name) const;
  const CompositionOp* find_operator(const std::string& name) const;
  const Action* find_action(const std::string& id) const;
  ExtendedRelations extended_of(const ActorName& name) const;
  /// Sync graph plus a clock for every actor that relies on its default.
  SyncGraph full_sync() const;

  friend bool operator==(const Environment&, const Environment&) = default;
};

struct ValidationReport {
  ViolationList violations;
  /// Breaches of asserted laws under the `warn` policy.
  ViolationList warnings;

  bool ok() const { return violations.empty(); }
};

/// Every broken structural invariant, plus breaches of asserted SM/RM/CA/EA
/// routed by the law policy.
ValidationReport validate_environment(const Environment& env);

bool can_send(const Environment& env, const ActorName& a, const ActorName& c);
/// True iff `c` is a backward acquaintance of `a`.
bool can_receive(const Environment& env, const ActorName& c, const ActorName& a);
/// Ordered pairs (A, C) on which `C in facq(A) <=> A in bacq(C)` fails.
ViolationList check_connectivity(const Environment& env);
std::set<ActorName> friends(const Environment& env, const ActorName& a);

/// Send actions owned by A that target an actor outside facq(A).
ViolationList check_send_axiom(const Environment& env);
/// Send actions from A to C where A is not a backward acquaintance of C.
ViolationList check_receive_axiom(const Environment& env);

enum class RankOrder { lower, equal, higher, incomparable };
std::string_view to_string(RankOrder r);

/// Compares ranks in the component forest. The environment's own name is
/// accepted and outranks every actor.
RankOrder rank_compare(const Environment& env, const ActorName& a, const ActorName& b);

struct CheckResult {
  bool ok = true;
  ViolationList witnesses;
};

CheckResult check_domain_embedding(const Environment& env_e, const Environment& env_d,
                                   const std::map<ActorName, ActorName>& mapping);
CheckResult check_modeling_axiom(const Environment& env, const std::vector<std::string>& objects,
                                 const std::map<std::string, ActorName>& model_map);

}  // namespace sam
