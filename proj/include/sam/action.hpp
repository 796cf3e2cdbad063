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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sam/rational.hpp"

namespace sam {

enum class Direction { internal, external, combined };
enum class DurationKind { singular, regular };
enum class Organization { direct, mediated, inaction };
enum class Dependency { primitive, automatic, mediated, unclassified };

std::string_view to_string(Direction d);
std::string_view to_string(DurationKind d);
std::string_view to_string(Organization o);
std::string_view to_string(Dependency d);

std::optional<Direction> direction_from_string(std::string_view s);
std::optional<DurationKind> duration_from_string(std::string_view s);
std::optional<Organization> organization_from_string(std::string_view s);
std::optional<Dependency> dependency_from_string(std::string_view s);

/// Union of target scopes: equal directions are kept, anything else mixes
/// into `combined`.
Direction combine_directions(Direction a, Direction b);

/// A messenger-sending capability: performing the action emits a messenger to
/// `target`, which arrives there as the transaction `transaction`.
struct SendCapability {
  std::string target;
  std::string transaction;
  bool request = false;

  friend bool operator==(const SendCapability&, const SendCapability&) = default;
};

struct ActionAttributes {
  Direction direction = Direction::internal;
  DurationKind duration = DurationKind::singular;
  /// Length of a regular action on its performer's clock. Ignored when singular.
  Rational length = 1;
  Organization organization = Organization::direct;
  Dependency dependency = Dependency::unclassified;
  std::optional<SendCapability> send;
  /// Receive-type transaction: the arrival of a messenger.
  bool receive = false;

  friend bool operator==(const ActionAttributes&, const ActionAttributes&) = default;
};

/// An n-ary operation on actions. `ea_compliant` states whether composing
/// inactions with this operator is again an inaction. A non-compliant
/// operator may carry `alternatives`: a closed set of mutually exclusive
/// atomic actions, in which case composing the inactions of all but one
/// alternative infers the remaining one.
struct CompositionOp {
  std::string name;
  std::size_t arity = 1;
  bool ea_compliant = true;
  std::vector<std::string> alternatives;

  friend bool operator==(const CompositionOp&, const CompositionOp&) = default;
};

/// An action term. Values are immutable; all constructors normalize, so two
/// actions denote the same term iff `same_term` holds.
class Action {
 public:
  enum class Kind { atomic, composed, negation, total_inaction };

  static Action atomic(std::string name, ActionAttributes attributes = {});
  static Action total_inaction();

  Kind kind() const { return kind_; }
  /// Atomic: the action name. Composed: the operator name. Otherwise empty.
  const std::string& name() const { return name_; }
  /// Composed: operands in order. Negation: the single negated action.
  const std::vector<Action>& parts() const { return parts_; }
  const ActionAttributes& attributes() const { return attributes_; }

  Direction direction() const { return attributes_.direction; }
  DurationKind duration() const { return attributes_.duration; }
  Organization organization() const { return attributes_.organization; }
  Dependency dependency() const { return attributes_.dependency; }

  bool is_void() const { return attributes_.organization == Organization::inaction; }
  bool is_negation() const { return kind_ == Kind::negation; }
  bool is_total_inaction() const { return kind_ == Kind::total_inaction; }

  /// Canonical term text: `walk`, `~walk`, `seq(a,~b)`, `T_IA`.
  std::string to_string() const;

  /// Full equality: term and attributes.
  friend bool operator==(const Action& a, const Action& b);

 private:
  friend Action negate(const Action& action);
  friend Action compose(const CompositionOp& op, std::vector<Action> parts);

  Action() = default;

  Kind kind_ = Kind::atomic;
  std::string name_;
  std::vector<Action> parts_;
  ActionAttributes attributes_;
};

/// Term equality, ignoring attributes.
bool same_term(const Action& a, const Action& b);

struct TermLess {
  bool operator()(const Action& a, const Action& b) const { return a.to_string() < b.to_string(); }
};

/// Normalized inaction. Double negation cancels. Throws AlgebraError for
/// total inaction.
Action negate(const Action& action);

/// Applies `op`. Parts that are all inactions collapse to the negation of the
/// positive composition when `op` is EA-compliant, or to the inferred
/// alternative when `op` carries one. Throws ArityError on a length mismatch.
Action compose(const CompositionOp& op, std::vector<Action> parts);

/// True iff performing `whole` includes performing `part`: reflexive sub-term
/// inclusion through compositions, `~x` includes `~y` whenever `y` includes
/// `x`, and total inaction includes every inaction. Does not descend into
/// negated sub-terms.
bool includes(const Action& whole, const Action& part);

/// Id-keyed action definitions of one environment.
using ActionCatalog = std::map<std::string, Action>;

// Modalities ---------------------------------------------------------------

enum class Modality {
  possible,
  tolerable,
  permitted,
  performed,
  impossible,
  intolerable,
  prohibited,
  not_performed,
  unknown,
  unidentified,
  unspecified,
  indefinite,
};

enum class ModalityGroup { positive, negative, neutral };

std::string_view to_string(Modality m);
std::optional<Modality> modality_from_string(std::string_view s);
ModalityGroup group_of(Modality m);
/// Direct contrary (possible/impossible, ...). Neutral modalities have none.
std::optional<Modality> contrary(Modality m);

struct ModalityAssertion {
  std::string action;
  Modality modality;

  friend auto operator<=>(const ModalityAssertion&, const ModalityAssertion&) = default;
};

struct ModalityClosure {
  std::set<ModalityAssertion> assertions;
  std::vector<std::pair<ModalityAssertion, ModalityAssertion>> contradictions;
};

/// Closes under: unknown -> unidentified -> unspecified; performed ->
/// possible; unknown & possible & permitted -> not_performed. Reports each
/// directly contrary pair present in the result.
ModalityClosure modality_closure(const std::set<ModalityAssertion>& assertions);

}  // namespace sam
