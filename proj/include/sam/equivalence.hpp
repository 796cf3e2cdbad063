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
#include <span>
#include <string>
#include <string_view>

#include "sam/action.hpp"
#include "sam/model.hpp"

namespace sam {

/// Action components (act, trn, react, proact, joint) with void actions
/// stripped from act and from every image position.
struct ActionComponents {
  std::set<std::string> act;
  std::set<std::string> trn;
  MultiRelation react;
  MultiRelation proact;
  std::set<JointDependence> joint;

  friend bool operator==(const ActionComponents&, const ActionComponents&) = default;
};

ActionComponents void_normalized(const ActorSpec& actor, const ActionCatalog& catalog);

/// Same five structural components; names are not compared.
bool identical(const ActorSpec& a, const ActorSpec& b);
/// Same action components after void normalization.
bool dyn_equivalent(const ActorSpec& a, const ActorSpec& b, const ActionCatalog& catalog);

enum class IsoScope { structural, dynamic };

/// Bijections between corresponding components. In dynamic scope `rel_map`
/// covers only the relations that proact and joint dependences use.
struct ComponentIsomorphism {
  IsoScope scope = IsoScope::structural;
  std::map<std::string, std::string> rel_map;
  std::map<std::string, std::string> act_map;
  std::map<std::string, std::string> trn_map;

  friend bool operator==(const ComponentIsomorphism&, const ComponentIsomorphism&) = default;
};

struct IsoOptions {
  /// Require act_map to carry each action to one of the same dependency class.
  bool preserve_dependency = false;
};

/// Structural isomorphism: rel (kind-preserving), act (void-preserving) and
/// trn bijections that carry react, proact and joint dependences exactly.
std::optional<ComponentIsomorphism> homological(const ActorSpec& a, const ActorSpec& b,
                                                const ActionCatalog& catalog,
                                                IsoOptions options = {});
/// Isomorphism of the void-normalized action components.
std::optional<ComponentIsomorphism> dyn_homological(const ActorSpec& a, const ActorSpec& b,
                                                    const ActionCatalog& catalog,
                                                    IsoOptions options = {});

/// Checks that `iso` is a witness for its scope between `a` and `b`.
bool is_witness(const ActorSpec& a, const ActorSpec& b, const ComponentIsomorphism& iso,
                const ActionCatalog& catalog, IsoOptions options = {});

// Classification --------------------------------------------------------------

enum class Behavioral { primitive, automatic, general };
std::string_view to_string(Behavioral b);

/// Prime => primitive, compound => composite. Flags, since the classes overlap.
struct StructuralClass {
  bool prime = false;
  bool primitive = false;
  bool composite = false;
  bool compound = false;

  friend bool operator==(const StructuralClass&, const StructuralClass&) = default;
};

struct CommunicationClass {
  bool closed = false;
  bool inactive = false;
  bool non_receptive = false;
  bool open = false;
  bool undemanding = false;
  bool active = false;
  bool receptive = false;

  friend bool operator==(const CommunicationClass&, const CommunicationClass&) = default;
};

struct ClassificationReport {
  ActorName actor;
  Behavioral behavioral = Behavioral::general;
  StructuralClass structural;
  CommunicationClass communication;
  bool primary = true;
};

/// Over proper (non-void) actions: all primitive -> primitive, all primitive
/// or automatic -> automatic, otherwise general.
Behavioral behavioral_class(const ActorSpec& actor, const ActionCatalog& catalog);

/// Throws NameError for an unregistered actor.
ClassificationReport classify(const ActorSpec& actor, const Environment& env);
ClassificationReport classify(const ActorName& actor, const Environment& env);

/// Implication lattice of a report (closed => inactive, ...).
ViolationList check_report_lattice(const ClassificationReport& report);

enum class PairRelation { identical, dyn_equivalent, homological, dyn_homological };
std::string_view to_string(PairRelation r);
std::optional<PairRelation> pair_relation_from_string(std::string_view s);

struct PairCase {
  ActorSpec a;
  ActorSpec b;
  PairRelation relation;
};

/// Whether `relation` holds between a and b. Homology variants use
/// dependency-preserving witnesses.
bool related(const ActorSpec& a, const ActorSpec& b, PairRelation relation,
             const ActionCatalog& catalog);

/// For every related pair, behavioral primitiveness and automaticity must
/// transfer in both directions. Unrelated pairs are skipped.
ViolationList check_preservation(std::span<const PairCase> pairs, const ActionCatalog& catalog);

/// Structural consequences of the Modeling Axiom: no non-actor parts, so
/// primitive actors are prime and composite actors compound. Throws
/// ConfigError when MA is not asserted for `env`.
ViolationList check_modeling_consequences(const Environment& env);

}  // namespace sam
