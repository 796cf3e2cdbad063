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

#include "sam/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "sam/action.hpp"
#include "sam/combact.hpp"
#include "sam/equivalence.hpp"

namespace sam {

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

// Shared, lazily computed state for one suite run.
class Context {
 public:
  Context(const Environment& env, std::span<const EventRecord> events)
      : env(env), events(events), sync(env.full_sync()) {}

  const Environment& env;
  std::span<const EventRecord> events;
  SyncGraph sync;

  // Catalog actions and all their sub-terms, deduplicated by term text.
  const std::vector<Action>& terms() {
    if (!terms_) {
      terms_.emplace();
      std::set<std::string> seen;
      std::function<void(const Action&)> visit = [&](const Action& a) {
        if (!seen.insert(a.to_string()).second) return;
        terms_->push_back(a);
        for (const auto& p : a.parts()) visit(p);
      };
      for (const auto& [_, a] : env.actions) visit(a);
    }
    return *terms_;
  }

  // Environment actors followed by one renamed copy of each; the catalog
  // is extended so the copies resolve.
  const std::vector<ActorSpec>& population() {
    if (!population_) build_population();
    return *population_;
  }
  const ActionCatalog& population_catalog() {
    if (!population_) build_population();
    return catalog_;
  }

  // relation[i][j] over population(), keyed by relation and dependency
  // preservation.
  const std::vector<std::vector<bool>>& matrix(PairRelation relation, bool preserving) {
    auto& slot = matrices_[{relation, preserving}];
    if (slot.empty()) {
      const auto& pop = population();
      const ActionCatalog& cat = population_catalog();
      const IsoOptions options{.preserve_dependency = preserving};
      slot.assign(pop.size(), std::vector<bool>(pop.size(), false));
      for (std::size_t i = 0; i < pop.size(); ++i) {
        for (std::size_t j = 0; j < pop.size(); ++j) {
          switch (relation) {
            case PairRelation::identical: slot[i][j] = identical(pop[i], pop[j]); break;
            case PairRelation::dyn_equivalent: slot[i][j] = dyn_equivalent(pop[i], pop[j], cat); break;
            case PairRelation::homological: {
              const auto iso = homological(pop[i], pop[j], cat, options);
              if (iso && !is_witness(pop[i], pop[j], *iso, cat, options)) bad_witnesses_.push_back({i, j});
              slot[i][j] = iso.has_value();
              break;
            }
            case PairRelation::dyn_homological: {
              const auto iso = dyn_homological(pop[i], pop[j], cat, options);
              if (iso && !is_witness(pop[i], pop[j], *iso, cat, options)) bad_witnesses_.push_back({i, j});
              slot[i][j] = iso.has_value();
              break;
            }
          }
        }
      }
    }
    return slot;
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& bad_witnesses() const { return bad_witnesses_; }

  const std::vector<ClassificationReport>& reports() {
    if (!reports_) {
      reports_.emplace();
      for (const auto& a : env.actors) reports_->push_back(classify(a, env));
    }
    return *reports_;
  }

 private:
  void build_population() {
    population_.emplace(env.actors);
    catalog_ = env.actions;
    const auto renamed = [](const std::string& s) { return s + "'"; };
    for (const auto& a : env.actors) {
      ActorSpec c;
      c.name = renamed(a.name);
      for (auto r : a.rel) {
        r.id = renamed(r.id);
        c.rel.push_back(std::move(r));
      }
      const auto copy_id = [&](const std::string& id) {
        if (const auto it = env.actions.find(id); it != env.actions.end()) catalog_.emplace(renamed(id), it->second);
        return renamed(id);
      };
      for (const auto& x : a.act) c.act.insert(copy_id(x));
      for (const auto& t : a.trn) c.trn.insert(copy_id(t));
      for (const auto& [t, x] : a.react) c.react.emplace(renamed(t), renamed(x));
      for (const auto& [r, x] : a.proact) c.proact.emplace(renamed(r), renamed(x));
      for (const auto& j : a.joint) c.joint.insert({renamed(j.trn), renamed(j.rel), renamed(j.act)});
      c.facq = a.facq;
      c.bacq = a.bacq;
      c.components = a.components;
      c.parts = a.parts;
      population_->push_back(std::move(c));
    }
  }

  std::optional<std::vector<Action>> terms_;
  std::optional<std::vector<ActorSpec>> population_;
  ActionCatalog catalog_;
  std::map<std::pair<PairRelation, bool>, std::vector<std::vector<bool>>> matrices_;
  std::vector<std::pair<std::size_t, std::size_t>> bad_witnesses_;
  std::optional<std::vector<ClassificationReport>> reports_;
};

using Check = std::function<LawCheckResult(Context&)>;

LawCheckResult verdict(ViolationList witnesses, std::string note = {}) {
  LawCheckResult r;
  r.status = witnesses.empty() ? LawStatus::pass : LawStatus::fail;
  r.witnesses = std::move(witnesses);
  r.note = std::move(note);
  return r;
}

LawCheckResult not_applicable(std::string note) {
  LawCheckResult r;
  r.status = LawStatus::not_applicable;
  r.note = std::move(note);
  return r;
}

ViolationList only(const ViolationList& all, std::string_view rule) {
  ViolationList out;
  for (const auto& v : all) {
    if (v.rule == rule) out.push_back(v);
  }
  return out;
}

ViolationList relabel(ViolationList list, const std::string& rule) {
  for (auto& v : list) v.rule = rule;
  return list;
}

bool contains(const std::vector<ActorName>& names, const ActorName& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

// Messaging -------------------------------------------------------------------

LawCheckResult law_sm(Context& c) {
  if (!c.env.laws.sm) return not_applicable("SM is not asserted");
  return verdict(check_send_axiom(c.env));
}

LawCheckResult law_rm(Context& c) {
  if (!c.env.laws.rm) return not_applicable("RM is not asserted");
  return verdict(check_receive_axiom(c.env));
}

LawCheckResult law_ca(Context& c) {
  if (!c.env.laws.ca) return not_applicable("CA is not asserted");
  return verdict(check_connectivity(c.env));
}

// Forward reachability of messaging must coincide with facq under SM.
LawCheckResult prop_3_1(Context& c) {
  if (!c.env.laws.sm) return not_applicable("SM is not asserted");
  ViolationList out = relabel(check_send_axiom(c.env), "Prop3.1");
  for (const auto& a : c.env.actors) {
    for (const auto& b : c.env.actors) {
      if (can_send(c.env, a.name, b.name) != contains(a.facq, b.name)) {
        out.push_back({"Prop3.1", "(" + a.name + "," + b.name + ")", "can_send disagrees with facq"});
      }
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_2(Context& c) {
  if (!c.env.laws.rm) return not_applicable("RM is not asserted");
  ViolationList out = relabel(check_receive_axiom(c.env), "Prop3.2");
  for (const auto& a : c.env.actors) {
    for (const auto& b : c.env.actors) {
      if (can_receive(c.env, b.name, a.name) != contains(a.bacq, b.name)) {
        out.push_back({"Prop3.2", "(" + b.name + "," + a.name + ")", "can_receive disagrees with bacq"});
      }
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_3(Context& c) {
  if (!c.env.laws.ca) return not_applicable("CA is not asserted");
  ViolationList out;
  for (const auto& a : c.env.actors) {
    for (const auto& b : friends(c.env, a.name)) {
      if (!friends(c.env, b).count(a.name)) {
        out.push_back({"Prop3.3", "(" + a.name + "," + b + ")", b + " is a friend of " + a.name + " but not conversely"});
      }
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_4(Context& c) {
  for (const auto& a : c.env.actors) {
    const std::set<ActorName> f(a.facq.begin(), a.facq.end());
    const std::set<ActorName> b(a.bacq.begin(), a.bacq.end());
    if (f != b) return not_applicable("some acquaintance of " + a.name + " is not a friend");
    for (const auto& n : f) {
      const ActorSpec* other = c.env.find(n);
      if (!other || !contains(other->facq, a.name)) {
        return not_applicable("acquaintance edge " + a.name + "-" + n + " is not symmetric");
      }
    }
  }
  return verdict(relabel(check_connectivity(c.env), "Prop3.4"));
}

// Temporal --------------------------------------------------------------------

LawCheckResult timing_law(Context& c, Timing timing, const std::string& law) {
  bool any = false;
  for (const auto& e : c.events) any = any || e.timing == timing;
  if (!any) return not_applicable("no " + std::string(to_string(timing)) + " reactions among the events");
  ViolationList out;
  try {
    for (const auto& v : reaction_timing_check(c.events, c.sync)) {
      const auto it = std::find_if(c.events.begin(), c.events.end(), [&](const EventRecord& e) { return e.id == v.path; });
      if (it != c.events.end() && it->timing == timing) out.push_back({law, v.path, v.detail});
    }
  } catch (const ReferenceError& e) {
    out.push_back({law, "events", e.what()});
  }
  return verdict(std::move(out));
}

// Calls f(i, j, k) for all ordered triples of distinct pairwise-comparable
// events.
template <typename F>
void comparable_triples(Context& c, F f) {
  const auto& ev = c.events;
  const std::size_t n = ev.size();
  std::vector<std::vector<bool>> cmp(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cmp[i][j] = comparable(ev[i], ev[j], c.sync);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !cmp[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || !cmp[j][k] || !cmp[i][k]) continue;
        f(ev[i], ev[j], ev[k]);
      }
    }
  }
}

std::string triple(const EventRecord& a, const EventRecord& b, const EventRecord& c) {
  return "(" + a.id + "," + b.id + "," + c.id + ")";
}

LawCheckResult prop_3_8(Context& c) {
  const CausalGraph causal(c.events);
  ViolationList out;
  for (const auto& a : c.events) {
    for (const auto& b : c.events) {
      for (const auto& d : c.events) {
        if (causal.dependent(a.id, b.id) && causal.dependent(b.id, d.id) && !causal.dependent(a.id, d.id)) {
          out.push_back({"Prop3.8", triple(a, b, d), "dependence is not transitive"});
        }
      }
    }
  }
  return verdict(std::move(out), "by construction: dependence is causal-graph connectivity");
}

LawCheckResult prop_3_9(Context& c) {
  ViolationList out;
  const auto& clocks = c.sync.clocks();
  for (const auto& a : clocks) {
    for (const auto& b : clocks) {
      for (const auto& d : clocks) {
        if (c.sync.connected(a.id, b.id) && c.sync.connected(b.id, d.id) && !c.sync.connected(a.id, d.id)) {
          out.push_back({"Prop3.9", "(" + a.id + "," + b.id + "," + d.id + ")", "comparability is not transitive"});
        }
      }
    }
  }
  return verdict(std::move(out), "by construction: comparability is synchronization-graph connectivity");
}

LawCheckResult prop_3_10(Context& c) {
  ViolationList out;
  comparable_triples(c, [&](const EventRecord& a, const EventRecord& b, const EventRecord& d) {
    if (!a.time.momentary() || !b.time.momentary() || !d.time.momentary()) return;
    if (parallel(a, b, c.sync) && parallel(b, d, c.sync) && !parallel(a, d, c.sync)) {
      out.push_back({"Prop3.10", triple(a, b, d), "momentary parallelism is not transitive"});
    }
  });
  return verdict(std::move(out));
}

LawCheckResult prop_3_11(Context& c) {
  ViolationList out;
  comparable_triples(c, [&](const EventRecord& a, const EventRecord& b, const EventRecord& d) {
    if (!a.time.is_interval() || !b.time.is_interval() || !d.time.is_interval()) return;
    if (parallel(a, b, c.sync) && parallel(b, d, c.sync) && parallel(a, d, c.sync)) {
      const std::vector<EventRecord> all{a, b, d};
      if (!parallel(all, c.sync)) {
        out.push_back({"Prop3.11", triple(a, b, d), "pairwise parallel intervals without a common point"});
      }
    }
  });
  return verdict(std::move(out), "single-interval events only");
}

LawCheckResult prop_3_12(Context& c) {
  ViolationList out;
  comparable_triples(c, [&](const EventRecord& a, const EventRecord& b, const EventRecord& d) {
    if (strictly_parallel(a, b, c.sync) && strictly_parallel(b, d, c.sync) && !strictly_parallel(a, d, c.sync)) {
      out.push_back({"Prop3.12", triple(a, b, d), "strict parallelism is not transitive"});
    }
  });
  return verdict(std::move(out), "by construction: strict parallelism is time-set equality");
}

LawCheckResult prop_3_13(Context& c) {
  ViolationList out;
  comparable_triples(c, [&](const EventRecord& a, const EventRecord& b, const EventRecord& d) {
    if (sequential(a, b, c.sync) && sequential(b, d, c.sync) && !sequential(a, d, c.sync)) {
      out.push_back({"Prop3.13", triple(a, b, d), "sequence is not transitive"});
    }
  });
  return verdict(std::move(out));
}

LawCheckResult prop_3_14(Context& c) {
  ViolationList out;
  comparable_triples(c, [&](const EventRecord& e3, const EventRecord& e2, const EventRecord& e1) {
    if (strictly_sequential(e3, e2, c.sync) && strictly_sequential(e2, e1, c.sync) &&
        e2.time.has_positive_duration() && strictly_sequential(e3, e1, c.sync)) {
      out.push_back({"Prop3.14", triple(e3, e2, e1), "strict sequence skips a positive-duration event"});
    }
  });
  return verdict(std::move(out));
}

// Actions ---------------------------------------------------------------------

LawCheckResult prop_3_15(Context& c) {
  const ModalityClosure closure = modality_closure(c.env.modalities);
  ViolationList out;
  for (const auto& [x, y] : closure.contradictions) {
    out.push_back({"Prop3.15", x.action,
                   std::string(to_string(x.modality)) + " contradicts " + std::string(to_string(y.modality))});
  }
  if (modality_closure(closure.assertions).assertions != closure.assertions) {
    out.push_back({"Prop3.15", "modalities", "closure is not idempotent"});
  }
  const auto has = [&](const std::string& a, Modality m) { return closure.assertions.count({a, m}) > 0; };
  for (const auto& [a, m] : closure.assertions) {
    if (m == Modality::unknown && !has(a, Modality::unidentified)) {
      out.push_back({"Prop3.15", a, "unknown action is not unidentified"});
    }
    if (m == Modality::unidentified && !has(a, Modality::unspecified)) {
      out.push_back({"Prop3.15", a, "unidentified action is not unspecified"});
    }
    if (m == Modality::performed && !has(a, Modality::possible)) {
      out.push_back({"Prop3.15", a, "performed action is not possible"});
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_16(Context& c) {
  const auto& t = c.terms();
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> inc(n, std::vector<bool>(n));
  ViolationList out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inc[i][j] = includes(t[i], t[j]);
    if (!inc[i][i]) out.push_back({"Prop3.16", t[i].to_string(), "inclusion is not reflexive"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!inc[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (inc[j][k] && !inc[i][k]) {
          out.push_back({"Prop3.16", t[i].to_string() + " > " + t[j].to_string() + " > " + t[k].to_string(),
                         "inclusion is not transitive"});
        }
      }
    }
  }
  return verdict(std::move(out));
}

std::vector<Action> synthetic_atoms(std::size_t n, Direction d, const std::string& prefix) {
  std::vector<Action> out;
  for (std::size_t i = 0; i < n; ++i) {
    ActionAttributes attrs;
    attrs.direction = d;
    out.push_back(Action::atomic(prefix + std::to_string(i + 1), attrs));
  }
  return out;
}

LawCheckResult prop_3_17(Context& c) {
  ViolationList out;
  for (const auto& op : c.env.operators) {
    for (const Direction d : {Direction::internal, Direction::external, Direction::combined}) {
      const Action r = compose(op, synthetic_atoms(op.arity, d, "x"));
      if (!r.is_negation() && r.direction() != d) {
        out.push_back({"Prop3.17", "operators." + op.name,
                       "composition of " + std::string(to_string(d)) + " actions is " + std::string(to_string(r.direction()))});
      }
    }
  }
  for (const auto& t : c.terms()) {
    if (t.kind() != Action::Kind::composed || t.parts().empty()) continue;
    const Direction d = t.parts().front().direction();
    const bool uniform = std::all_of(t.parts().begin(), t.parts().end(), [&](const Action& p) { return p.direction() == d; });
    if (uniform && t.direction() != d) {
      out.push_back({"Prop3.17", t.to_string(), "direction of uniform parts is not preserved"});
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_18(Context& c) {
  ViolationList out;
  for (const auto& t : c.terms()) {
    if (t.is_total_inaction()) continue;
    if (!(negate(negate(t)) == t)) out.push_back({"Prop3.18", t.to_string(), "double negation does not cancel"});
  }
  return verdict(std::move(out), "by construction: negation is normalized on construction");
}

// Composes the negations of `arity` atoms: the operator's alternatives when it
// has enough of them, otherwise fresh atoms.
Action void_composition(const CompositionOp& op) {
  std::vector<Action> parts;
  if (op.alternatives.size() >= op.arity) {
    for (std::size_t i = 0; i < op.arity; ++i) parts.push_back(negate(Action::atomic(op.alternatives[i])));
  } else {
    for (const auto& a : synthetic_atoms(op.arity, Direction::internal, "x")) parts.push_back(negate(a));
  }
  return compose(op, parts);
}

std::string void_composition_text(const CompositionOp& op) {
  std::string parts;
  if (op.alternatives.size() >= op.arity) {
    for (std::size_t i = 0; i < op.arity; ++i) parts += (i ? "," : "") + ("~" + op.alternatives[i]);
  } else {
    for (std::size_t i = 0; i < op.arity; ++i) parts += (i ? "," : "") + ("~x" + std::to_string(i + 1));
  }
  return op.name + "(" + parts + ")";
}

LawCheckResult law_ea(Context& c) {
  ViolationList out;
  for (const auto& op : c.env.operators) {
    const Action r = void_composition(op);
    if (!r.is_negation()) {
      out.push_back({"EA", "operators." + op.name,
                     void_composition_text(op) + " = " + r.to_string() + ", which is a proper action"});
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_19(Context& c) {
  ViolationList out;
  bool any = false;
  for (const auto& op : c.env.operators) {
    if (!op.ea_compliant) continue;
    any = true;
    const Action r = void_composition(op);
    if (!r.is_negation()) {
      out.push_back({"Prop3.19", "operators." + op.name, void_composition_text(op) + " = " + r.to_string()});
    }
  }
  for (const auto& t : c.terms()) {
    if (t.kind() != Action::Kind::composed) continue;
    const CompositionOp* op = c.env.find_operator(t.name());
    if (!op || !op->ea_compliant) continue;
    if (std::all_of(t.parts().begin(), t.parts().end(), [](const Action& p) { return p.is_negation(); })) {
      out.push_back({"Prop3.19", t.to_string(), "composition of inactions did not normalize to an inaction"});
    }
  }
  if (!any && out.empty()) return not_applicable("no EA-compliant operators");
  return verdict(std::move(out));
}

bool negation_free(const Action& a) {
  if (a.is_negation() || a.is_total_inaction()) return false;
  return std::all_of(a.parts().begin(), a.parts().end(), negation_free);
}

LawCheckResult prop_3_20(Context& c) {
  ViolationList out;
  std::vector<Action> proper;
  for (const auto& t : c.terms()) {
    if (negation_free(t)) proper.push_back(t);
  }
  for (const auto& a : proper) {
    for (const auto& b : proper) {
      if (includes(b, a) && !includes(negate(a), negate(b))) {
        out.push_back({"Prop3.20", b.to_string() + " > " + a.to_string(), "inclusion of inactions is not reversed"});
      }
    }
  }
  return verdict(std::move(out), "over negation-free terms");
}

LawCheckResult prop_3_21(Context& c) {
  ViolationList out;
  const Action total = Action::total_inaction();
  for (const auto& t : c.terms()) {
    if (t.is_total_inaction() || t.is_negation()) continue;
    if (!includes(total, negate(t))) out.push_back({"Prop3.21", "~" + t.to_string(), "not included in T_IA"});
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_22(Context& c) {
  ViolationList out;
  for (const auto& op : c.env.operators) {
    const Action r = compose(op, synthetic_atoms(op.arity, Direction::internal, "x"));
    if (r.organization() != Organization::mediated) {
      out.push_back({"Prop3.22", "operators." + op.name, "composition of proper actions is not mediated"});
    }
  }
  for (const auto& t : c.terms()) {
    if (t.kind() != Action::Kind::composed) continue;
    if (std::none_of(t.parts().begin(), t.parts().end(), [](const Action& p) { return p.is_void(); }) &&
        t.organization() != Organization::mediated) {
      out.push_back({"Prop3.22", t.to_string(), "composition of proper actions is not mediated"});
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_23(Context& c) {
  ViolationList out;
  for (const auto& a : c.env.actors) {
    for (const auto& id : a.act) {
      const Action* x = c.env.find_action(id);
      if (!x || x->is_total_inaction() || x->is_negation()) continue;
      const Dependency d = classify_dependency(a, *x, c.env.actions);
      const Dependency n = classify_dependency(a, negate(*x), c.env.actions);
      if (d != n) {
        out.push_back({"Prop3.23", "actors." + a.name + ".act." + id,
                       std::string(to_string(d)) + " action has " + std::string(to_string(n)) + " inaction"});
      }
    }
  }
  return verdict(std::move(out));
}

LawCheckResult prop_3_24(Context& c) {
  ViolationList out;
  for (const auto& a : c.env.actors) {
    for (const auto& id : a.act) {
      const Dependency d = classify_dependency(a, id);
      if (d == Dependency::primitive && !is_automatic(d)) {
        out.push_back({"Prop3.24", "actors." + a.name + ".act." + id, "primitive action is not automatic"});
      }
    }
  }
  return verdict(std::move(out), "by construction: Combact embeds both single-axis relations");
}

// Equivalence and classification ------------------------------------------------

ActorSpec without_void(const ActorSpec& a, const ActionCatalog& catalog) {
  const auto is_void = [&](const std::string& id) {
    const auto it = catalog.find(id);
    return it != catalog.end() && it->second.is_void();
  };
  ActorSpec out = a;
  out.name = a.name + "/proper";
  std::erase_if(out.act, is_void);
  std::erase_if(out.react, [&](const auto& p) { return is_void(p.second); });
  std::erase_if(out.proact, [&](const auto& p) { return is_void(p.second); });
  std::erase_if(out.joint, [&](const JointDependence& j) { return is_void(j.act); });
  return out;
}

LawCheckResult prop_3_25(Context& c) {
  ViolationList out;
  for (const auto& a : c.env.actors) {
    if (!dyn_equivalent(a, without_void(a, c.env.actions), c.env.actions)) {
      out.push_back({"Prop3.25", "actors." + a.name, "not dynamically equivalent to its void-free reduct"});
    }
  }
  return verdict(std::move(out));
}

LawCheckResult preservation(Context& c, PairRelation relation, const std::string& law) {
  const auto& pop = c.population();
  std::vector<PairCase> cases;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    for (std::size_t j = 0; j < pop.size(); ++j) {
      if (i != j && c.matrix(relation, true)[i][j]) cases.push_back({pop[i], pop[j], relation});
    }
  }
  if (cases.empty()) return not_applicable("no related pairs");
  return verdict(only(check_preservation(cases, c.population_catalog()), law));
}

LawCheckResult equivalence_law(Context& c, PairRelation relation, const std::string& law) {
  const auto& m = c.matrix(relation, false);
  const auto& pop = c.population();
  const std::size_t n = m.size();
  ViolationList out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i][i]) out.push_back({law, pop[i].name, "not reflexive"});
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] && !m[j][i]) out.push_back({law, "(" + pop[i].name + "," + pop[j].name + ")", "not symmetric"});
      if (!m[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m[j][k] && !m[i][k]) {
          out.push_back({law, "(" + pop[i].name + "," + pop[j].name + "," + pop[k].name + ")", "not transitive"});
        }
      }
    }
  }
  if (relation == PairRelation::homological || relation == PairRelation::dyn_homological) {
    for (const auto& [i, j] : c.bad_witnesses()) {
      out.push_back({law, "(" + pop[i].name + "," + pop[j].name + ")", "returned isomorphism is not a witness"});
    }
  }
  return verdict(std::move(out), "over the actors and a renamed copy of each");
}

LawCheckResult implication_law(Context& c, std::initializer_list<std::pair<PairRelation, PairRelation>> chain,
                               const std::string& law) {
  const auto& pop = c.population();
  ViolationList out;
  for (const auto& [from, to] : chain) {
    const auto& a = c.matrix(from, false);
    const auto& b = c.matrix(to, false);
    for (std::size_t i = 0; i < pop.size(); ++i) {
      for (std::size_t j = 0; j < pop.size(); ++j) {
        if (a[i][j] && !b[i][j]) {
          out.push_back({law, "(" + pop[i].name + "," + pop[j].name + ")",
                         std::string(to_string(from)) + " but not " + std::string(to_string(to))});
        }
      }
    }
  }
  return verdict(std::move(out));
}

LawCheckResult lattice_law(Context& c, const std::string& law) {
  ViolationList out;
  for (const auto& r : c.reports()) {
    for (auto& v : only(check_report_lattice(r), law)) {
      v.path = "actors." + r.actor;
      out.push_back(std::move(v));
    }
  }
  return verdict(std::move(out));
}

LawCheckResult restriction_law(Context& c, const std::string& law) {
  ViolationList out;
  for (const auto& a : c.env.actors) {
    for (auto& v : only(check_restrictions(a, c.env.extended_of(a.name)), law)) out.push_back(std::move(v));
  }
  return verdict(std::move(out), "extended representations built by the factory satisfy this by construction");
}

// Modeling and rank -------------------------------------------------------------

LawCheckResult law_ma(Context& c) {
  if (!c.env.laws.ma) return not_applicable("MA is not asserted");
  return verdict(check_modeling_axiom(c.env, c.env.domain.objects, c.env.domain.model).witnesses);
}

LawCheckResult modeling_law(Context& c, std::initializer_list<std::string_view> rules) {
  if (!c.env.laws.ma) return not_applicable("MA is not asserted");
  const ViolationList all = check_modeling_consequences(c.env);
  ViolationList out;
  for (const auto rule : rules) {
    for (auto& v : only(all, rule)) out.push_back(std::move(v));
  }
  return verdict(std::move(out));
}

// The modeled sub-environment D (actors modeling some domain object, or the
// whole environment when no domain is declared) embeds by inclusion.
LawCheckResult prop_3_32(Context& c) {
  Environment d = c.env;
  std::set<ActorName> modeled;
  for (const auto& [_, actor] : c.env.domain.model) modeled.insert(actor);
  if (!modeled.empty()) {
    std::erase_if(d.actors, [&](const ActorSpec& a) { return !modeled.count(a.name); });
  }
  std::map<ActorName, ActorName> inclusion;
  for (const auto& a : d.actors) inclusion[a.name] = a.name;
  return verdict(check_domain_embedding(c.env, d, inclusion).witnesses);
}

LawCheckResult prop_3_34(Context& c) {
  ViolationList out;
  for (const auto& a : c.env.actors) {
    if (rank_compare(c.env, a.name, a.name) == RankOrder::lower) {
      out.push_back({"Prop3.34", "actors." + a.name, "ranks below itself"});
    }
    if (rank_compare(c.env, a.name, c.env.name) != RankOrder::lower) {
      out.push_back({"Prop3.34", "actors." + a.name, "does not rank below the environment"});
    }
    for (const auto& part : a.components) {
      if (rank_compare(c.env, part, a.name) != RankOrder::lower) {
        out.push_back({"Prop3.34", "actors." + a.name + ".components." + part, "component does not rank lower"});
      }
    }
  }
  return verdict(std::move(out));
}

struct Entry {
  LawInfo info;
  Check check;
};

const std::vector<Entry>& entries() {
  using PR = PairRelation;
  static const std::vector<Entry> kEntries = [] {
    std::vector<Entry> e;
    const auto add = [&](std::string id, std::string title, Check check, bool by_construction = false) {
      e.push_back({{std::move(id), std::move(title), by_construction}, std::move(check)});
    };
    add("SM", "send only to forward acquaintances", law_sm);
    add("RM", "receive only from backward acquaintances", law_rm);
    add("CA", "forward and backward acquaintance agree", law_ca);
    add("EA", "composition of inactions is an inaction", law_ea);
    add("MA", "every domain object is modeled by an actor", law_ma);
    add("Prop3.1", "can send iff forward acquaintance", prop_3_1, true);
    add("Prop3.2", "can receive iff backward acquaintance", prop_3_2, true);
    add("Prop3.3", "friendship is symmetric", prop_3_3);
    add("Prop3.4", "all acquaintances friends implies connectivity", prop_3_4);
    add("Prop3.5", "sharp reactions start with their trigger",
        [](Context& c) { return timing_law(c, Timing::sharp, "Prop3.5"); });
    add("Prop3.6", "reserved reactions are strictly sequential",
        [](Context& c) { return timing_law(c, Timing::reserved, "Prop3.6"); });
    add("Prop3.7", "delayed reactions start after their trigger",
        [](Context& c) { return timing_law(c, Timing::delayed, "Prop3.7"); });
    add("Prop3.8", "temporal dependence is transitive", prop_3_8, true);
    add("Prop3.9", "temporal comparability is transitive", prop_3_9, true);
    add("Prop3.10", "parallelism of momentary events is transitive", prop_3_10);
    add("Prop3.11", "pairwise parallel intervals share a point", prop_3_11);
    add("Prop3.12", "strict parallelism is transitive", prop_3_12, true);
    add("Prop3.13", "sequence is transitive", prop_3_13);
    add("Prop3.14", "strict sequence does not skip a positive-duration event", prop_3_14);
    add("Prop3.15", "modality closure is consistent", prop_3_15);
    add("Prop3.16", "inclusion is reflexive and transitive", prop_3_16);
    add("Prop3.17", "composition preserves a common direction", prop_3_17);
    add("Prop3.18", "double negation cancels", prop_3_18, true);
    add("Prop3.19", "EA-compliant composition of inactions is an inaction", prop_3_19);
    add("Prop3.20", "negation reverses inclusion", prop_3_20);
    add("Prop3.21", "every inaction is included in total inaction", prop_3_21);
    add("Prop3.22", "composition of proper actions is mediated", prop_3_22);
    add("Prop3.23", "an inaction shares the dependency class of its action", prop_3_23);
    add("Prop3.24", "primitive actions are automatic", prop_3_24, true);
    add("Prop3.25", "void actions do not affect dynamic equivalence", prop_3_25);
    add("Prop3.26", "dynamic equivalence preserves behavioral primitiveness",
        [](Context& c) { return preservation(c, PR::dyn_equivalent, "Prop3.26"); });
    add("Prop3.27", "dynamic equivalence preserves behavioral automaticity",
        [](Context& c) { return preservation(c, PR::dyn_equivalent, "Prop3.27"); });
    add("Prop3.28", "homology preserves behavioral primitiveness",
        [](Context& c) { return preservation(c, PR::homological, "Prop3.28"); });
    add("Prop3.29", "homology preserves behavioral automaticity",
        [](Context& c) { return preservation(c, PR::homological, "Prop3.29"); });
    add("Prop3.30", "dynamic homology preserves behavioral primitiveness",
        [](Context& c) { return preservation(c, PR::dyn_homological, "Prop3.30"); });
    add("Prop3.31", "dynamic homology preserves behavioral automaticity",
        [](Context& c) { return preservation(c, PR::dyn_homological, "Prop3.31"); });
    add("Prop3.32", "a modeled sub-environment embeds injectively", prop_3_32);
    add("Prop3.33", "under MA primitive actors are prime and composite actors compound",
        [](Context& c) { return modeling_law(c, {"Prop3.33a", "Prop3.33b"}); });
    add("Prop3.34", "components rank lower than their actor", prop_3_34);
    add("Lemma3.1", "identity is an equivalence",
        [](Context& c) { return equivalence_law(c, PR::identical, "Lemma3.1"); });
    add("Lemma3.2", "dynamic equivalence is an equivalence",
        [](Context& c) { return equivalence_law(c, PR::dyn_equivalent, "Lemma3.2"); });
    add("Lemma3.3", "identical actors are dynamically equivalent",
        [](Context& c) { return implication_law(c, {{PR::identical, PR::dyn_equivalent}}, "Lemma3.3"); });
    add("Lemma3.4", "homology is an equivalence",
        [](Context& c) { return equivalence_law(c, PR::homological, "Lemma3.4"); });
    add("Lemma3.5", "identical actors are homological",
        [](Context& c) { return implication_law(c, {{PR::identical, PR::homological}}, "Lemma3.5"); });
    add("Lemma3.6", "dynamic homology is an equivalence",
        [](Context& c) { return equivalence_law(c, PR::dyn_homological, "Lemma3.6"); });
    add("Lemma3.7", "dynamically equivalent and homological actors are dynamically homological",
        [](Context& c) {
          return implication_law(
              c, {{PR::dyn_equivalent, PR::dyn_homological}, {PR::homological, PR::dyn_homological}}, "Lemma3.7");
        });
    for (const auto& [id, title] : std::vector<std::pair<std::string, std::string>>{
             {"Lemma3.8", "closed actors are inactive"},
             {"Lemma3.9", "closed actors are non-receptive"},
             {"Lemma3.10", "non-receptive inactive actors are closed"},
             {"Lemma3.11", "open actors are active"},
             {"Lemma3.12", "receptive active actors are open"},
             {"Lemma3.13", "inactive actors are undemanding"}}) {
      add(id, title, [id](Context& c) { return lattice_law(c, id); });
    }
    add("Lemma3.14", "react is the restriction of vreact",
        [](Context& c) { return restriction_law(c, "Lemma3.14"); }, true);
    add("Lemma3.15", "proact is the restriction of vproact",
        [](Context& c) { return restriction_law(c, "Lemma3.15"); }, true);
    add("Cor3.1", "behaviorally primitive actors are automatic", [](Context& c) { return lattice_law(c, "Cor3.1"); });
    add("Cor3.2", "under MA only primitive and compound actors",
        [](Context& c) { return modeling_law(c, {"Cor3.2"}); });
    add("Cor3.3", "closed actors are undemanding", [](Context& c) { return lattice_law(c, "Cor3.3"); });
    return e;
  }();
  return kEntries;
}

}  // namespace

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> kInfo = [] {
    std::vector<LawInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kInfo;
}

std::vector<LawCheckResult> run_law_suite(const Environment& env, const std::set<std::string>& selection,
                                          std::span<const EventRecord> events) {
  const bool all = selection.count("all") > 0;
  for (const auto& id : selection) {
    if (id == "all") continue;
    const bool known = std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.id == id; });
    if (!known) throw NameError("unknown law id '" + id + "'");
  }
  Context context(env, events);
  std::vector<LawCheckResult> out;
  for (const auto& e : entries()) {
    if (!all && !selection.count(e.info.id)) continue;
    LawCheckResult r = e.check(context);
    r.law = e.info.id;
    if (e.info.by_construction) r.note = r.note.empty() ? "by construction" : r.note;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sam
