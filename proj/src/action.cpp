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

#include "sam/action.hpp"

#include <algorithm>
#include <array>

#include "sam/error.hpp"

namespace sam {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<std::string_view, Enum>, N>& table,
                           std::string_view s) {
  for (const auto& [name, value] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<std::string_view, Enum>, N>& table, Enum e) {
  for (const auto& [name, value] : table) {
    if (value == e) return name;
  }
  return "?";
}

constexpr std::array<std::pair<std::string_view, Direction>, 3> kDirections{{
    {"internal", Direction::internal},
    {"external", Direction::external},
    {"combined", Direction::combined},
}};

constexpr std::array<std::pair<std::string_view, DurationKind>, 2> kDurations{{
    {"singular", DurationKind::singular},
    {"regular", DurationKind::regular},
}};

constexpr std::array<std::pair<std::string_view, Organization>, 3> kOrganizations{{
    {"direct", Organization::direct},
    {"mediated", Organization::mediated},
    {"void", Organization::inaction},
}};

constexpr std::array<std::pair<std::string_view, Dependency>, 4> kDependencies{{
    {"primitive", Dependency::primitive},
    {"automatic", Dependency::automatic},
    {"mediated", Dependency::mediated},
    {"unclassified", Dependency::unclassified},
}};

constexpr std::array<std::pair<std::string_view, Modality>, 12> kModalities{{
    {"possible", Modality::possible},
    {"tolerable", Modality::tolerable},
    {"permitted", Modality::permitted},
    {"performed", Modality::performed},
    {"impossible", Modality::impossible},
    {"intolerable", Modality::intolerable},
    {"prohibited", Modality::prohibited},
    {"not_performed", Modality::not_performed},
    {"unknown", Modality::unknown},
    {"unidentified", Modality::unidentified},
    {"unspecified", Modality::unspecified},
    {"indefinite", Modality::indefinite},
}};

bool same_terms(const std::vector<Action>& a, const std::vector<Action>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Action& x, const Action& y) { return same_term(x, y); });
}

}  // namespace

std::string_view to_string(Direction d) { return name_of(kDirections, d); }
std::string_view to_string(DurationKind d) { return name_of(kDurations, d); }
std::string_view to_string(Organization o) { return name_of(kOrganizations, o); }
std::string_view to_string(Dependency d) { return name_of(kDependencies, d); }
std::string_view to_string(Modality m) { return name_of(kModalities, m); }

std::optional<Direction> direction_from_string(std::string_view s) { return lookup(kDirections, s); }
std::optional<DurationKind> duration_from_string(std::string_view s) { return lookup(kDurations, s); }
std::optional<Organization> organization_from_string(std::string_view s) {
  return lookup(kOrganizations, s);
}
std::optional<Dependency> dependency_from_string(std::string_view s) {
  return lookup(kDependencies, s);
}
std::optional<Modality> modality_from_string(std::string_view s) { return lookup(kModalities, s); }

Direction combine_directions(Direction a, Direction b) {
  return a == b ? a : Direction::combined;
}

// Action --------------------------------------------------------------------

Action Action::atomic(std::string name, ActionAttributes attributes) {
  Action a;
  a.kind_ = Kind::atomic;
  a.name_ = std::move(name);
  a.attributes_ = std::move(attributes);
  return a;
}

Action Action::total_inaction() {
  Action a;
  a.kind_ = Kind::total_inaction;
  a.attributes_.organization = Organization::inaction;
  return a;
}

std::string Action::to_string() const {
  switch (kind_) {
    case Kind::atomic:
      return name_;
    case Kind::total_inaction:
      return "T_IA";
    case Kind::negation:
      return "~" + parts_.front().to_string();
    case Kind::composed: {
      std::string out = name_ + "(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const Action& a, const Action& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.attributes_ == b.attributes_ &&
         a.parts_ == b.parts_;
}

bool same_term(const Action& a, const Action& b) {
  return a.kind() == b.kind() && a.name() == b.name() && same_terms(a.parts(), b.parts());
}

Action negate(const Action& action) {
  switch (action.kind()) {
    case Action::Kind::total_inaction:
      throw AlgebraError("negation of total inaction is undefined");
    case Action::Kind::negation:
      return action.parts().front();
    default:
      break;
  }
  Action n;
  n.kind_ = Action::Kind::negation;
  n.parts_ = {action};
  n.attributes_ = action.attributes();
  n.attributes_.organization = Organization::inaction;
  n.attributes_.send.reset();
  n.attributes_.receive = false;
  return n;
}

Action compose(const CompositionOp& op, std::vector<Action> parts) {
  if (op.arity == 0 || parts.size() != op.arity) {
    throw ArityError("operator '" + op.name + "' expects " + std::to_string(op.arity) +
                     " operand(s), got " + std::to_string(parts.size()));
  }

  ActionAttributes attrs;
  attrs.direction = parts.front().direction();
  attrs.dependency = parts.front().dependency();
  attrs.length = 0;
  bool all_singular = true;
  bool all_void = true;
  for (const auto& p : parts) {
    attrs.direction = combine_directions(attrs.direction, p.direction());
    if (p.dependency() != attrs.dependency) attrs.dependency = Dependency::unclassified;
    if (p.duration() == DurationKind::regular) {
      all_singular = false;
      attrs.length += p.attributes().length;
    }
    all_void = all_void && p.is_void();
  }
  attrs.duration = all_singular ? DurationKind::singular : DurationKind::regular;
  if (all_singular) attrs.length = 1;

  const bool all_negations = std::all_of(parts.begin(), parts.end(),
                                         [](const Action& p) { return p.is_negation(); });
  if (all_negations && op.ea_compliant) {
    std::vector<Action> positive;
    positive.reserve(parts.size());
    for (const auto& p : parts) positive.push_back(p.parts().front());
    return negate(compose(op, std::move(positive)));
  }

  if (all_negations && !op.alternatives.empty()) {
    std::set<std::string> excluded;
    bool inferable = true;
    for (const auto& p : parts) {
      const Action& inner = p.parts().front();
      const bool listed = std::find(op.alternatives.begin(), op.alternatives.end(),
                                    inner.name()) != op.alternatives.end();
      if (inner.kind() != Action::Kind::atomic || !listed) inferable = false;
      excluded.insert(inner.name());
    }
    if (inferable && excluded.size() + 1 == op.alternatives.size()) {
      for (const auto& alt : op.alternatives) {
        if (!excluded.count(alt)) {
          ActionAttributes inferred;
          inferred.direction = attrs.direction;
          return Action::atomic(alt, inferred);
        }
      }
    }
  }

  attrs.organization = all_void ? Organization::inaction : Organization::mediated;
  Action c;
  c.kind_ = Action::Kind::composed;
  c.name_ = op.name;
  c.parts_ = std::move(parts);
  c.attributes_ = std::move(attrs);
  return c;
}

bool includes(const Action& whole, const Action& part) {
  if (same_term(whole, part)) return true;
  switch (whole.kind()) {
    case Action::Kind::total_inaction:
      return part.is_negation();
    case Action::Kind::negation:
      return part.is_negation() && includes(part.parts().front(), whole.parts().front());
    case Action::Kind::composed:
      return std::any_of(whole.parts().begin(), whole.parts().end(),
                         [&](const Action& p) { return includes(p, part); });
    case Action::Kind::atomic:
      return false;
  }
  return false;
}

// Modalities ------------------------------------------------------------------

ModalityGroup group_of(Modality m) {
  switch (m) {
    case Modality::possible:
    case Modality::tolerable:
    case Modality::permitted:
    case Modality::performed:
      return ModalityGroup::positive;
    case Modality::impossible:
    case Modality::intolerable:
    case Modality::prohibited:
    case Modality::not_performed:
      return ModalityGroup::negative;
    default:
      return ModalityGroup::neutral;
  }
}

std::optional<Modality> contrary(Modality m) {
  switch (m) {
    case Modality::possible: return Modality::impossible;
    case Modality::impossible: return Modality::possible;
    case Modality::tolerable: return Modality::intolerable;
    case Modality::intolerable: return Modality::tolerable;
    case Modality::permitted: return Modality::prohibited;
    case Modality::prohibited: return Modality::permitted;
    case Modality::performed: return Modality::not_performed;
    case Modality::not_performed: return Modality::performed;
    default: return std::nullopt;
  }
}

ModalityClosure modality_closure(const std::set<ModalityAssertion>& assertions) {
  ModalityClosure out;
  out.assertions = assertions;
  auto has = [&](const std::string& a, Modality m) {
    return out.assertions.count(ModalityAssertion{a, m}) > 0;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ModalityAssertion> added;
    for (const auto& [action, modality] : out.assertions) {
      switch (modality) {
        case Modality::unknown:
          added.push_back({action, Modality::unidentified});
          if (has(action, Modality::possible) && has(action, Modality::permitted)) {
            added.push_back({action, Modality::not_performed});
          }
          break;
        case Modality::unidentified:
          added.push_back({action, Modality::unspecified});
          break;
        case Modality::performed:
          added.push_back({action, Modality::possible});
          break;
        default:
          break;
      }
    }
    for (auto& a : added) changed = out.assertions.insert(std::move(a)).second || changed;
  }

  for (const auto& a : out.assertions) {
    const auto c = contrary(a.modality);
    if (c && a.modality < *c && has(a.action, *c)) {
      out.contradictions.emplace_back(a, ModalityAssertion{a.action, *c});
    }
  }
  return out;
}

}  // namespace sam
