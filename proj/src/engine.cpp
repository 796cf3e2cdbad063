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

#include "sam/engine.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sam {

namespace {

bool contains(const std::vector<std::string>& list, const std::string& x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

// Resolves multivalued choices. Only choices with two or more options are
// recorded.
class Chooser {
 public:
  virtual ~Chooser() = default;

  std::size_t choose(std::size_t options) {
    if (options < 2) return 0;
    const std::size_t pick = pick_index(options);
    taken_.push_back(pick);
    arities_.push_back(options);
    return pick;
  }

  const std::vector<std::size_t>& taken() const { return taken_; }
  const std::vector<std::size_t>& arities() const { return arities_; }

 protected:
  virtual std::size_t pick_index(std::size_t options) = 0;

 private:
  std::vector<std::size_t> taken_;
  std::vector<std::size_t> arities_;
};

class SeededChooser final : public Chooser {
 public:
  explicit SeededChooser(std::uint64_t seed) : rng_(seed) {}

 protected:
  // Plain modulo keeps the stream identical across standard libraries.
  std::size_t pick_index(std::size_t options) override { return rng_() % options; }

 private:
  std::mt19937_64 rng_;
};

class ScriptedChooser final : public Chooser {
 public:
  explicit ScriptedChooser(std::vector<std::size_t> prefix) : prefix_(std::move(prefix)) {}

 protected:
  std::size_t pick_index(std::size_t options) override {
    const std::size_t at = taken().size();
    if (at < prefix_.size()) return std::min(prefix_[at], options - 1);
    return 0;
  }

 private:
  std::vector<std::size_t> prefix_;
};

std::string branch_text(const std::vector<std::size_t>& choices) {
  if (choices.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(choices[i]);
  }
  return out;
}

std::vector<std::size_t> parse_branch(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("malformed branch id '" + text + "'");
    }
    out.push_back(std::stoul(part));
  }
  return out;
}

class Simulator {
 public:
  Simulator(const Environment& env, const SimConfig& config, Chooser& chooser)
      : env_(env), config_(config), sync_(env.full_sync()), chooser_(chooser),
        cursor_(config.seed) {}

  Trace run(const std::vector<EventRecord>& initial) {
    for (const auto& e : initial) used_ids_.insert(e.id);

    for (const auto& actor : env_.actors) {
      for (const auto& r : actor.rel) {
        if (!actor.marks_of(r.id).actualized || images(actor.proact, r.id).empty()) continue;
        EventRecord e;
        e.actor = actor.name;
        e.action = r.id;
        e.time = TimeSet::moment(actor.local_clock(), 0);
        e.kind = EventKind::actualize;
        schedule(std::move(e));
      }
    }
    for (auto e : initial) {
      if (e.time.clock().empty()) e.time = TimeSet(env_.actor(e.actor).local_clock(), e.time.pieces());
      schedule(std::move(e));
    }

    while (!agenda_.empty()) {
      if (trace_.events.size() >= config_.max_steps) {
        trace_.truncated = true;
        break;
      }
      emit(take_next());
    }
    return std::move(trace_);
  }

 private:
  struct Pending {
    EventRecord event;
    std::uint64_t seq;
  };

  void schedule(EventRecord e) { agenda_.push_back({std::move(e), next_seq_++}); }

  const std::string& component(const std::string& clock) {
    auto it = component_.find(clock);
    if (it == component_.end()) it = component_.emplace(clock, sync_.component_of(clock)).first;
    return it->second;
  }

  // Round-robin over synchronization components, earliest mapped start
  // within the chosen component.
  EventRecord take_next() {
    std::vector<std::string> live;
    for (const auto& p : agenda_) live.push_back(component(p.event.clock()));
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    const std::string chosen = live[cursor_++ % live.size()];

    std::size_t best = agenda_.size();
    Rational best_start;
    for (std::size_t i = 0; i < agenda_.size(); ++i) {
      const auto& e = agenda_[i].event;
      if (component(e.clock()) != chosen) continue;
      const Rational start = map_to_clock(e.time, chosen, sync_).start();
      if (best == agenda_.size() || start < best_start ||
          (start == best_start && agenda_[i].seq < agenda_[best].seq)) {
        best = i;
        best_start = start;
      }
    }
    EventRecord out = std::move(agenda_[best].event);
    agenda_.erase(agenda_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

  std::string fresh_id() {
    std::string id;
    do {
      id = "e" + std::to_string(next_id_++);
    } while (used_ids_.count(id));
    used_ids_.insert(id);
    return id;
  }

  TimeSet timed(const std::string& clock, const Rational& start, const std::string& action_id) const {
    const Action* a = env_.find_action(action_id);
    if (a && a->duration() == DurationKind::regular) {
      return TimeSet::interval(clock, start, start + a->attributes().length);
    }
    return TimeSet::moment(clock, start);
  }

  void emit(EventRecord e) {
    if (e.id.empty()) e.id = fresh_id();
    auto& front = frontier_[e.clock()];
    if (e.time.end() > front) front = e.time.end();
    trace_.events.push_back(e);
    if (e.kind == EventKind::receive) trace_.messages.emplace_back(e.trigger, e.id);

    const ActorSpec& actor = env_.actor(e.actor);
    if (e.kind == EventKind::actualize) {
      react_with(e, actor, e.action, images(actor.proact, e.action), EventKind::proaction);
      return;
    }
    if (e.kind != EventKind::receive) {
      if (const Action* a = env_.find_action(e.action); a && a->attributes().send) {
        deliver(e, actor, *a->attributes().send);
      }
    }
    if (actor.trn.count(e.action)) {
      std::set<std::string> candidates = images(actor.react, e.action);
      for (const auto& j : actor.joint) {
        if (j.trn == e.action && actor.marks_of(j.rel).actualized) candidates.insert(j.act);
      }
      react_with(e, actor, e.action, candidates, EventKind::reaction);
    }
  }

  void react_with(const EventRecord& trigger, const ActorSpec& actor, const std::string& key,
                  const std::set<std::string>& candidates, EventKind kind) {
    if (candidates.empty()) return;
    const std::vector<std::string> options(candidates.begin(), candidates.end());
    const std::string& action = options[chooser_.choose(options.size())];

    TimingRule rule;
    if (const auto it = config_.timing.find({actor.name, key}); it != config_.timing.end()) {
      rule = it->second;
    }
    Rational start;
    switch (rule.timing) {
      case Timing::sharp: start = trigger.time.start(); break;
      case Timing::reserved: start = trigger.time.end(); break;
      case Timing::delayed: start = trigger.time.end() + rule.delay; break;
    }
    EventRecord e;
    e.actor = actor.name;
    e.action = action;
    e.time = timed(trigger.clock(), start, action);
    e.depends_on = {trigger.id};
    e.kind = kind;
    e.timing = rule.timing;
    e.trigger = trigger.id;
    schedule(std::move(e));
  }

  void deliver(const EventRecord& send, const ActorSpec& sender, const SendCapability& cap) {
    const ActorSpec& receiver = env_.actor(cap.target);
    const bool forward = contains(sender.facq, receiver.name);
    const bool backward = contains(receiver.bacq, sender.name);
    if (!forward || !backward) {
      if (config_.violation_policy == ViolationPolicy::error) {
        Violation w{forward ? "RM" : "SM", send.id,
                    sender.name + " -> " + receiver.name +
                        (forward ? ": sender is not a backward acquaintance of the receiver"
                                 : ": receiver is not a forward acquaintance of the sender")};
        throw RunError("illegal messenger from event " + send.id, std::move(w));
      }
      return;
    }

    Rational delay = 0;
    if (const auto it = config_.delivery_delay.find({sender.name, receiver.name});
        it != config_.delivery_delay.end()) {
      delay = it->second;
    }
    const std::string& clock = receiver.local_clock();
    Rational start;
    if (sync_.connected(send.clock(), clock)) {
      start = map_to_clock(send.time, clock, sync_).end() + delay;
    } else {
      // No common time: place after whatever the receiver has already seen.
      start = frontier_[clock] + delay;
    }
    EventRecord e;
    e.actor = receiver.name;
    e.action = cap.transaction;
    e.time = timed(clock, start, cap.transaction);
    e.depends_on = {send.id};
    e.kind = EventKind::receive;
    e.trigger = send.id;
    schedule(std::move(e));
  }

  const Environment& env_;
  const SimConfig& config_;
  SyncGraph sync_;
  Chooser& chooser_;
  std::uint64_t cursor_;
  std::vector<Pending> agenda_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t next_id_ = 1;
  std::set<std::string> used_ids_;
  std::map<std::string, std::string> component_;
  std::map<std::string, Rational> frontier_;
  Trace trace_;
};

ViolationList validate_initial(const Environment& env, const std::vector<EventRecord>& initial) {
  ViolationList out;
  std::set<std::string> ids;
  for (const auto& e : initial) ids.insert(e.id);
  std::set<std::string> seen;
  for (const auto& e : initial) {
    const std::string path = "events." + e.id;
    if (e.id.empty()) out.push_back({"event.id", path, "empty event id"});
    if (!seen.insert(e.id).second) out.push_back({"event.id", path, "duplicate event id"});
    if (!env.find(e.actor)) out.push_back({"event.actor", path, "unknown actor '" + e.actor + "'"});
    if (!env.find_action(e.action)) {
      out.push_back({"event.action", path, "unknown action '" + e.action + "'"});
    }
    if (e.time.empty()) out.push_back({"event.time", path, "empty time set"});
    if (!e.time.clock().empty() && !env.full_sync().has_clock(e.time.clock())) {
      out.push_back({"event.clock", path, "unknown clock '" + e.time.clock() + "'"});
    }
    for (const auto& d : e.depends_on) {
      if (!ids.count(d)) out.push_back({"event.depends_on", path, "unknown event '" + d + "'"});
    }
  }
  return out;
}

void prepare(const Environment& env, const SimConfig& config,
             const std::vector<EventRecord>& initial) {
  ViolationList problems = validate_environment(env).violations;
  for (auto& v : validate_config(config)) problems.push_back(std::move(v));
  for (auto& v : validate_initial(env, initial)) problems.push_back(std::move(v));
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

Trace run_with(const Environment& env, const SimConfig& config,
               const std::vector<EventRecord>& initial, Chooser& chooser, bool enumerated) {
  Trace t = Simulator(env, config, chooser).run(initial);
  if (enumerated) t.branch_id = branch_text(chooser.taken());
  return t;
}

}  // namespace

std::string_view to_string(SimMode m) {
  return m == SimMode::sampled ? "sampled" : "enumerate-all";
}

std::optional<SimMode> sim_mode_from_string(std::string_view s) {
  if (s == "sampled") return SimMode::sampled;
  if (s == "enumerate-all" || s == "enumerate_all") return SimMode::enumerate_all;
  return std::nullopt;
}

ViolationList validate_config(const SimConfig& config) {
  ViolationList out;
  if (config.max_steps == 0) out.push_back({"sim.max_steps", "sim.max_steps", "must be positive"});
  for (const auto& [key, rule] : config.timing) {
    const std::string path = "sim.timing." + key.first + "." + key.second;
    if (rule.timing == Timing::delayed && rule.delay <= 0) {
      out.push_back({"sim.timing", path, "delayed reactions need a positive delay"});
    }
    if (rule.timing != Timing::delayed && rule.delay != 0) {
      out.push_back({"sim.timing", path, "only delayed reactions take a delay"});
    }
  }
  for (const auto& [key, delay] : config.delivery_delay) {
    if (delay < 0) {
      out.push_back({"sim.delivery_delay", "sim.delivery_delay." + key.first + "." + key.second,
                     "delay must be non-negative"});
    }
  }
  return out;
}

std::vector<Trace> run(const Environment& env, const SimConfig& config,
                       const std::vector<EventRecord>& initial) {
  prepare(env, config, initial);
  if (config.mode == SimMode::sampled) {
    SeededChooser chooser(config.seed);
    return {run_with(env, config, initial, chooser, false)};
  }

  std::vector<std::pair<std::vector<std::size_t>, Trace>> leaves;
  std::vector<std::vector<std::size_t>> pending{{}};
  while (!pending.empty()) {
    if (leaves.size() >= config.max_branches) {
      throw Error("enumeration exceeded " + std::to_string(config.max_branches) + " branches");
    }
    const auto prefix = std::move(pending.back());
    pending.pop_back();
    ScriptedChooser chooser(prefix);
    Trace t = run_with(env, config, initial, chooser, true);
    const auto& taken = chooser.taken();
    const auto& arities = chooser.arities();
    for (std::size_t j = prefix.size(); j < taken.size(); ++j) {
      for (std::size_t alt = 1; alt < arities[j]; ++alt) {
        std::vector<std::size_t> sibling(taken.begin(), taken.begin() + static_cast<std::ptrdiff_t>(j));
        sibling.push_back(alt);
        pending.push_back(std::move(sibling));
      }
    }
    leaves.emplace_back(taken, std::move(t));
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Trace> out;
  out.reserve(leaves.size());
  for (auto& [_, t] : leaves) out.push_back(std::move(t));
  return out;
}

Trace run_branch(const Environment& env, const SimConfig& config,
                 const std::vector<EventRecord>& initial, const std::string& branch_id) {
  prepare(env, config, initial);
  ScriptedChooser chooser(parse_branch(branch_id));
  return run_with(env, config, initial, chooser, true);
}

ViolationList check_trace(const Trace& trace, const Environment& env) {
  return check_trace(trace, env, env.full_sync());
}

ViolationList check_trace(const Trace& trace, const Environment& env, const SyncGraph& sync) {
  ViolationList out;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    if (!index.emplace(trace.events[i].id, i).second) {
      out.push_back({"trace.id", trace.events[i].id, "duplicate event id"});
    }
  }
  auto earlier = [&](const std::string& id, std::size_t i) -> const EventRecord* {
    const auto it = index.find(id);
    if (it == index.end() || it->second >= i) return nullptr;
    return &trace.events[it->second];
  };

  std::set<std::pair<std::string, std::string>> messages(trace.messages.begin(), trace.messages.end());
  std::size_t receives = 0;

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const EventRecord& e = trace.events[i];
    const ActorSpec* actor = env.find(e.actor);
    if (!actor) {
      out.push_back({"trace.actor", e.id, "unknown actor '" + e.actor + "'"});
      continue;
    }
    if (e.time.empty()) {
      out.push_back({"trace.time", e.id, "empty time set"});
      continue;
    }
    for (const auto& d : e.depends_on) {
      if (!earlier(d, i)) out.push_back({"trace.depends_on", e.id, "'" + d + "' is not an earlier event"});
    }

    if (e.kind != EventKind::actualize) {
      const Action* action = env.find_action(e.action);
      if (!action) {
        out.push_back({"trace.action", e.id, "unknown action '" + e.action + "'"});
      } else if (action->duration() == DurationKind::singular && !e.time.momentary()) {
        out.push_back({"duration.singular", e.id, "singular action with non-momentary time"});
      } else if (action->duration() == DurationKind::regular && !e.time.has_positive_duration()) {
        out.push_back({"duration.regular", e.id, "regular action with zero duration"});
      }
    } else if (!actor->find_relation(e.action)) {
      out.push_back({"trace.relation", e.id, "unknown relation '" + e.action + "'"});
    }

    if (e.kind == EventKind::receive) {
      ++receives;
      const EventRecord* send = earlier(e.trigger, i);
      if (!send) {
        out.push_back({"message.send", e.id, "no earlier send event '" + e.trigger + "'"});
        continue;
      }
      if (!messages.count({send->id, e.id})) {
        out.push_back({"message.edge", e.id, "missing from the message list"});
      }
      if (!e.depends_on.count(send->id)) {
        out.push_back({"message.causal", e.id, "does not depend on its send " + send->id});
      }
      const Action* sa = env.find_action(send->action);
      if (!sa || !sa->attributes().send) {
        out.push_back({"message.send", e.id, "trigger " + send->id + " is not a send action"});
        continue;
      }
      const auto& cap = *sa->attributes().send;
      if (cap.target != e.actor || cap.transaction != e.action) {
        out.push_back({"message.target", e.id,
                       "send " + send->id + " addresses " + cap.target + "/" + cap.transaction});
      }
      const ActorSpec* sender = env.find(send->actor);
      if (sender && !contains(sender->facq, e.actor)) {
        out.push_back({"SM", e.id, e.actor + " is not a forward acquaintance of " + send->actor});
      }
      if (!contains(actor->bacq, send->actor)) {
        out.push_back({"RM", e.id, send->actor + " is not a backward acquaintance of " + e.actor});
      }
      if (comparable(*send, e, sync) && !sequential(*send, e, sync)) {
        out.push_back({"message.order", e.id, "received before send " + send->id + " ended"});
      }
    }

    if (e.kind == EventKind::reaction || e.kind == EventKind::proaction) {
      const EventRecord* trigger = earlier(e.trigger, i);
      if (!trigger) {
        out.push_back({"trigger", e.id, "no earlier trigger '" + e.trigger + "'"});
        continue;
      }
      if (!e.timing) out.push_back({"timing", e.id, "reaction without a timing class"});
      if (!e.depends_on.count(trigger->id)) {
        out.push_back({"trigger.causal", e.id, "does not depend on trigger " + trigger->id});
      }
      std::set<std::string> allowed;
      if (e.kind == EventKind::proaction) {
        if (trigger->kind != EventKind::actualize) {
          out.push_back({"trigger.kind", e.id, "proaction not triggered by a relation"});
        }
        allowed = images(actor->proact, trigger->action);
      } else {
        allowed = images(actor->react, trigger->action);
        for (const auto& j : actor->joint) {
          if (j.trn == trigger->action) allowed.insert(j.act);
        }
      }
      if (trigger->actor != e.actor) {
        out.push_back({"trigger.actor", e.id, "trigger " + trigger->id + " belongs to " + trigger->actor});
      }
      if (!allowed.count(e.action)) {
        out.push_back({"trigger.image", e.id,
                       "'" + e.action + "' is not an image of '" + trigger->action + "'"});
      }
    }
  }
  if (messages.size() != receives) {
    out.push_back({"message.edge", "messages", "message list does not match receive events"});
  }

  try {
    std::vector<EventRecord> timed;
    for (const auto& e : trace.events) {
      if (e.timing && index.count(e.trigger)) timed.push_back(e);
      else if (!e.timing) timed.push_back(e);
    }
    for (auto& v : reaction_timing_check(timed, sync)) out.push_back(std::move(v));
  } catch (const ReferenceError& err) {
    out.push_back({"trigger", "trace", err.what()});
  }
  return out;
}

ReplayResult replay(const Environment& env, const SimConfig& config,
                    const std::vector<EventRecord>& initial, const Trace& trace) {
  const Trace again = config.mode == SimMode::enumerate_all || trace.branch_id != "-"
                          ? run_branch(env, config, initial, trace.branch_id)
                          : run(env, config, initial).front();
  ReplayResult r;
  const std::size_t n = std::min(again.events.size(), trace.events.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(again.events[i] == trace.events[i])) {
      r.identical = false;
      r.first_divergence = i;
      r.detail = "event " + std::to_string(i) + ": recorded " + trace.events[i].id + " " +
                 trace.events[i].action + " " + trace.events[i].time.to_string() + ", replayed " +
                 again.events[i].id + " " + again.events[i].action + " " +
                 again.events[i].time.to_string();
      return r;
    }
  }
  if (again.events.size() != trace.events.size()) {
    r.identical = false;
    r.first_divergence = n;
    r.detail = "recorded " + std::to_string(trace.events.size()) + " events, replayed " +
               std::to_string(again.events.size());
  } else if (again.messages != trace.messages || again.truncated != trace.truncated) {
    r.identical = false;
    r.detail = "message list or truncation differs";
  }
  return r;
}

}  // namespace sam
