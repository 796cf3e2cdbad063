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

#include "sam/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sam {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json* field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::string req_string(const json& obj, const char* key, const std::string& path) {
  const json* j = field(obj, key);
  if (!j) fail(join(path, key), "missing field");
  return as_string(*j, join(path, key));
}

std::string opt_string(const json& obj, const char* key, const std::string& path,
                       std::string fallback = {}) {
  const json* j = field(obj, key);
  return j ? as_string(*j, join(path, key)) : fallback;
}

bool opt_bool(const json& obj, const char* key, const std::string& path, bool fallback) {
  const json* j = field(obj, key);
  if (!j) return fallback;
  if (!j->is_boolean()) fail(join(path, key), "expected a boolean");
  return j->get<bool>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Rational opt_rational(const json& obj, const char* key, const std::string& path, Rational fallback) {
  const json* j = field(obj, key);
  return j ? as_rational(*j, join(path, key)) : fallback;
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::string> string_list(const json& obj, const char* key, const std::string& path) {
  std::vector<std::string> out;
  const json* j = field(obj, key);
  if (!j) return out;
  const std::string p = join(path, key);
  const auto& arr = as_array(*j, p);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], index(p, i)));
  return out;
}

std::set<std::string> string_set(const json& obj, const char* key, const std::string& path) {
  const auto list = string_list(obj, key, path);
  return {list.begin(), list.end()};
}

MultiRelation pair_list(const json& obj, const char* key, const std::string& path) {
  MultiRelation out;
  const json* j = field(obj, key);
  if (!j) return out;
  const std::string p = join(path, key);
  const auto& arr = as_array(*j, p);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ip = index(p, i);
    if (!arr[i].is_array() || arr[i].size() != 2) fail(ip, "expected a [domain, image] pair");
    out.emplace(as_string(arr[i][0], ip + "[0]"), as_string(arr[i][1], ip + "[1]"));
  }
  return out;
}

json pairs_to_json(const MultiRelation& r) {
  json out = json::array();
  for (const auto& [a, b] : r) out.push_back(json::array({a, b}));
  return out;
}

template <typename T>
json list_to_json(const T& items) {
  json out = json::array();
  for (const auto& x : items) out.push_back(x);
  return out;
}

// Laws ------------------------------------------------------------------------

LawConfig parse_laws(const json& j, const std::string& path) {
  expect_object(j, path);
  LawConfig laws;
  laws.sm = opt_bool(j, "SM", path, laws.sm);
  laws.rm = opt_bool(j, "RM", path, laws.rm);
  laws.ca = opt_bool(j, "CA", path, laws.ca);
  laws.ea = opt_bool(j, "EA", path, laws.ea);
  laws.ma = opt_bool(j, "MA", path, laws.ma);
  const std::string policy = opt_string(j, "policy", path, "reject");
  if (policy == "reject") {
    laws.policy = LawConfig::Policy::reject;
  } else if (policy == "warn") {
    laws.policy = LawConfig::Policy::warn;
  } else {
    fail(join(path, "policy"), "expected 'reject' or 'warn'");
  }
  return laws;
}

json laws_to_json(const LawConfig& laws) {
  return json{{"SM", laws.sm}, {"RM", laws.rm}, {"CA", laws.ca}, {"EA", laws.ea}, {"MA", laws.ma},
              {"policy", laws.policy == LawConfig::Policy::reject ? "reject" : "warn"}};
}

// Actions ---------------------------------------------------------------------

template <typename Enum, typename Parse>
Enum parse_enum(const json& obj, const char* key, const std::string& path, Enum fallback, Parse parse) {
  const json* j = field(obj, key);
  if (!j) return fallback;
  const auto value = parse(as_string(*j, join(path, key)));
  if (!value) fail(join(path, key), "unknown value '" + j->get<std::string>() + "'");
  return *value;
}

ActionAttributes parse_attributes(const json& j, const std::string& path) {
  ActionAttributes a;
  a.direction = parse_enum(j, "direction", path, a.direction, direction_from_string);
  a.duration = parse_enum(j, "duration", path, a.duration, duration_from_string);
  a.length = opt_rational(j, "length", path, a.length);
  if (a.length <= 0) fail(join(path, "length"), "length must be positive");
  a.organization = parse_enum(j, "organization", path, a.organization, organization_from_string);
  a.dependency = parse_enum(j, "dependency", path, a.dependency, dependency_from_string);
  if (const json* s = field(j, "send")) {
    const std::string sp = join(path, "send");
    expect_object(*s, sp);
    a.send = SendCapability{req_string(*s, "to", sp), req_string(*s, "transaction", sp),
                            opt_bool(*s, "request", sp, false)};
  }
  a.receive = opt_bool(j, "receive", path, false);
  return a;
}

void attributes_to_json(const ActionAttributes& a, json& out) {
  out["direction"] = std::string(to_string(a.direction));
  out["duration"] = std::string(to_string(a.duration));
  if (a.duration == DurationKind::regular || a.length != 1) out["length"] = format_rational(a.length);
  out["organization"] = std::string(to_string(a.organization));
  out["dependency"] = std::string(to_string(a.dependency));
  if (a.send) {
    out["send"] = json{{"to", a.send->target}, {"transaction", a.send->transaction},
                       {"request", a.send->request}};
  }
  if (a.receive) out["receive"] = true;
}

class CatalogBuilder {
 public:
  CatalogBuilder(const json& entries, const std::vector<CompositionOp>& ops, const std::string& path)
      : ops_(ops) {
    const auto& arr = as_array(entries, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index(path, i);
      std::string id = arr[i].is_string() ? arr[i].get<std::string>() : req_string(arr[i], "id", p);
      if (id.empty()) fail(p, "empty action id");
      if (!decls_.emplace(id, Decl{&arr[i], p}).second) fail(p, "duplicate action id '" + id + "'");
      order_.push_back(id);
    }
  }

  ActionCatalog build() {
    for (const auto& id : order_) resolve(id, decls_.at(id).path);
    return std::move(done_);
  }

 private:
  struct Decl {
    const json* node;
    std::string path;
  };

  const Action& resolve(const std::string& id, const std::string& from) {
    if (const auto it = done_.find(id); it != done_.end()) return it->second;
    const auto d = decls_.find(id);
    if (d == decls_.end()) fail(from, "unknown action '" + id + "'");
    if (!active_.insert(id).second) fail(d->second.path, "action '" + id + "' is defined in terms of itself");
    const json& node = *d->second.node;
    const std::string& path = d->second.path;
    Action built = Action::total_inaction();
    if (node.is_string()) {
      built = Action::atomic(id);
    } else {
      expect_object(node, path);
      if (const json* term = field(node, "term")) {
        built = build_term(*term, join(path, "term"));
      } else {
        built = Action::atomic(id, parse_attributes(node, path));
      }
    }
    active_.erase(id);
    return done_.emplace(id, std::move(built)).first->second;
  }

  Action build_term(const json& t, const std::string& path) {
    if (t.is_string()) {
      const auto s = t.get<std::string>();
      if (s == "T_IA" || s == "total_inaction") return Action::total_inaction();
      return resolve(s, path);
    }
    expect_object(t, path);
    if (const json* atom = field(t, "atom")) {
      return Action::atomic(as_string(*atom, join(path, "atom")), parse_attributes(t, path));
    }
    if (const json* inner = field(t, "not")) {
      try {
        return negate(build_term(*inner, join(path, "not")));
      } catch (const AlgebraError& e) {
        fail(path, e.what());
      }
    }
    if (const json* op_name = field(t, "op")) {
      const std::string name = as_string(*op_name, join(path, "op"));
      const CompositionOp* op = nullptr;
      for (const auto& o : ops_) {
        if (o.name == name) op = &o;
      }
      if (!op) fail(join(path, "op"), "unknown operator '" + name + "'");
      const json* parts = field(t, "parts");
      if (!parts) fail(join(path, "parts"), "missing field");
      const std::string pp = join(path, "parts");
      std::vector<Action> built;
      for (std::size_t i = 0; i < as_array(*parts, pp).size(); ++i) {
        built.push_back(build_term((*parts)[i], index(pp, i)));
      }
      try {
        return compose(*op, std::move(built));
      } catch (const ArityError& e) {
        fail(path, e.what());
      }
    }
    fail(path, "expected an action reference, {\"atom\"}, {\"not\"} or {\"op\", \"parts\"}");
  }

  const std::vector<CompositionOp>& ops_;
  std::map<std::string, Decl> decls_;
  std::vector<std::string> order_;
  std::set<std::string> active_;
  ActionCatalog done_;
};

json term_to_json(const Action& a) {
  switch (a.kind()) {
    case Action::Kind::total_inaction:
      return "T_IA";
    case Action::Kind::atomic: {
      json out{{"atom", a.name()}};
      attributes_to_json(a.attributes(), out);
      return out;
    }
    case Action::Kind::negation:
      return json{{"not", term_to_json(a.parts().front())}};
    case Action::Kind::composed: {
      json parts = json::array();
      for (const auto& p : a.parts()) parts.push_back(term_to_json(p));
      return json{{"op", a.name()}, {"parts", parts}};
    }
  }
  return nullptr;
}

// Actors ----------------------------------------------------------------------

ActorSpec parse_actor(const json& j, const std::string& path) {
  expect_object(j, path);
  ActorSpec a;
  a.name = req_string(j, "name", path);
  a.clock = opt_string(j, "clock", path);
  if (const json* rel = field(j, "rel")) {
    const std::string rp = join(path, "rel");
    const auto& arr = as_array(*rel, rp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = index(rp, i);
      RelationItem r;
      if (arr[i].is_string()) {
        r.id = arr[i].get<std::string>();
      } else {
        expect_object(arr[i], ip);
        r.id = req_string(arr[i], "id", ip);
        r.kind = parse_enum(arr[i], "kind", ip, r.kind, relation_kind_from_string);
        r.endpoints = string_list(arr[i], "endpoints", ip);
        if (field(arr[i], "actualized") || field(arr[i], "acknowledged")) {
          a.marks[r.id] = Marks{opt_bool(arr[i], "actualized", ip, true),
                                opt_bool(arr[i], "acknowledged", ip, true)};
        }
      }
      a.rel.push_back(std::move(r));
    }
  }
  a.act = string_set(j, "act", path);
  a.trn = string_set(j, "trn", path);
  a.react = pair_list(j, "react", path);
  a.proact = pair_list(j, "proact", path);
  if (const json* c = field(j, "combact")) {
    const std::string cp = join(path, "combact");
    const auto& arr = as_array(*c, cp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = index(cp, i);
      if (!arr[i].is_array() || arr[i].size() != 3) fail(ip, "expected a [trn, rel, act] triple");
      a.joint.insert({as_string(arr[i][0], ip), as_string(arr[i][1], ip), as_string(arr[i][2], ip)});
    }
  }
  a.facq = string_list(j, "facq", path);
  a.bacq = string_list(j, "bacq", path);
  a.components = string_set(j, "components", path);
  a.parts = string_set(j, "parts", path);
  if (const json* m = field(j, "marks")) {
    const std::string mp = join(path, "marks");
    expect_object(*m, mp);
    for (const auto& [id, flags] : m->items()) {
      const std::string ip = join(mp, id);
      expect_object(flags, ip);
      a.marks[id] = Marks{opt_bool(flags, "actualized", ip, true), opt_bool(flags, "acknowledged", ip, true)};
    }
  }
  return a;
}

json actor_to_json(const ActorSpec& a) {
  json rel = json::array();
  for (const auto& r : a.rel) {
    rel.push_back(json{{"id", r.id}, {"kind", std::string(to_string(r.kind))},
                       {"endpoints", list_to_json(r.endpoints)}});
  }
  json combact = json::array();
  for (const auto& jd : a.joint) combact.push_back(json::array({jd.trn, jd.rel, jd.act}));
  json marks = json::object();
  for (const auto& [id, m] : a.marks) {
    marks[id] = json{{"actualized", m.actualized}, {"acknowledged", m.acknowledged}};
  }
  json out{{"name", a.name},           {"rel", rel},
           {"act", list_to_json(a.act)}, {"trn", list_to_json(a.trn)},
           {"react", pairs_to_json(a.react)}, {"proact", pairs_to_json(a.proact)},
           {"combact", combact},       {"facq", list_to_json(a.facq)},
           {"bacq", list_to_json(a.bacq)}, {"components", list_to_json(a.components)},
           {"parts", list_to_json(a.parts)}, {"marks", marks}};
  if (!a.clock.empty()) out["clock"] = a.clock;
  return out;
}

// Events and simulation -------------------------------------------------------

TimeSet parse_time(const json& j, const std::string& clock, const std::string& path) {
  if (j.is_string()) {
    try {
      return TimeSet::parse(clock, j.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  const auto& arr = as_array(j, path);
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ip = index(path, i);
    if (!arr[i].is_array() || arr[i].size() != 2) fail(ip, "expected a [lo, hi] pair");
    Rational lo = as_rational(arr[i][0], ip + "[0]");
    Rational hi = as_rational(arr[i][1], ip + "[1]");
    if (lo > hi) fail(ip, "lo > hi");
    pieces.push_back({std::move(lo), std::move(hi)});
  }
  return TimeSet(clock, std::move(pieces));
}

json time_to_json(const TimeSet& ts) {
  json out = json::array();
  for (const auto& p : ts.pieces()) {
    out.push_back(json::array({format_rational(p.lo), format_rational(p.hi)}));
  }
  return out;
}

EventRecord parse_event(const json& j, const std::string& path) {
  expect_object(j, path);
  EventRecord e;
  e.id = req_string(j, "id", path);
  e.actor = req_string(j, "actor", path);
  e.action = req_string(j, "action", path);
  const std::string clock = opt_string(j, "clock", path);
  const json* time = field(j, "time");
  if (!time) fail(join(path, "time"), "missing field");
  e.time = parse_time(*time, clock, join(path, "time"));
  const auto deps = string_list(j, "depends_on", path);
  e.depends_on = {deps.begin(), deps.end()};
  return e;
}

json event_to_json(const EventRecord& e) {
  json out{{"id", e.id}, {"actor", e.actor}, {"action", e.action}, {"time", time_to_json(e.time)},
           {"depends_on", list_to_json(e.depends_on)}};
  if (!e.clock().empty()) out["clock"] = e.clock();
  return out;
}

SimConfig parse_sim(const json& j, const std::string& path) {
  expect_object(j, path);
  SimConfig c;
  if (const json* seed = field(j, "seed")) {
    if (!seed->is_number_unsigned()) fail(join(path, "seed"), "expected a non-negative integer");
    c.seed = seed->get<std::uint64_t>();
  }
  c.mode = parse_enum(j, "mode", path, c.mode, sim_mode_from_string);
  if (const json* steps = field(j, "max_steps")) {
    if (!steps->is_number_unsigned() || steps->get<std::uint64_t>() == 0) {
      fail(join(path, "max_steps"), "expected a positive integer");
    }
    c.max_steps = steps->get<std::size_t>();
  }
  const std::string policy = opt_string(j, "violation_policy", path, "drop");
  if (policy == "drop") {
    c.violation_policy = ViolationPolicy::drop;
  } else if (policy == "error") {
    c.violation_policy = ViolationPolicy::error;
  } else {
    fail(join(path, "violation_policy"), "expected 'drop' or 'error'");
  }
  if (const json* d = field(j, "delivery_delay")) {
    const std::string dp = join(path, "delivery_delay");
    const auto& arr = as_array(*d, dp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = index(dp, i);
      expect_object(arr[i], ip);
      c.delivery_delay[{req_string(arr[i], "from", ip), req_string(arr[i], "to", ip)}] =
          opt_rational(arr[i], "delay", ip, 0);
    }
  }
  if (const json* t = field(j, "timing")) {
    const std::string tp = join(path, "timing");
    const auto& arr = as_array(*t, tp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = index(tp, i);
      expect_object(arr[i], ip);
      TimingRule rule;
      rule.timing = parse_enum(arr[i], "timing", ip, rule.timing, timing_from_string);
      rule.delay = opt_rational(arr[i], "delay", ip, 0);
      c.timing[{req_string(arr[i], "actor", ip), req_string(arr[i], "trigger", ip)}] = rule;
    }
  }
  return c;
}

json sim_to_json(const SimConfig& c) {
  json delays = json::array();
  for (const auto& [key, d] : c.delivery_delay) {
    delays.push_back(json{{"from", key.first}, {"to", key.second}, {"delay", format_rational(d)}});
  }
  json timing = json::array();
  for (const auto& [key, rule] : c.timing) {
    json r{{"actor", key.first}, {"trigger", key.second}, {"timing", std::string(to_string(rule.timing))}};
    if (rule.timing == Timing::delayed) r["delay"] = format_rational(rule.delay);
    timing.push_back(r);
  }
  return json{{"seed", c.seed},
              {"mode", std::string(to_string(c.mode))},
              {"max_steps", c.max_steps},
              {"violation_policy", c.violation_policy == ViolationPolicy::drop ? "drop" : "error"},
              {"delivery_delay", delays},
              {"timing", timing}};
}

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

SpecDocument parse_spec_unchecked(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    if (const auto pos = message.find("parse error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(location_of(text, e.byte == 0 ? 0 : e.byte - 1), message);
  }
  expect_object(root, "document");

  const json* version = field(root, "version");
  if (!version) fail("version", "missing field");
  if (!version->is_number_integer() || version->get<int>() != kSpecVersion) {
    fail("version", "unsupported version (expected " + std::to_string(kSpecVersion) + ")");
  }

  SpecDocument doc;
  Environment& env = doc.env;
  env.name = opt_string(root, "environment", "", env.name);
  if (const json* laws = field(root, "laws")) env.laws = parse_laws(*laws, "laws");

  if (const json* clocks = field(root, "clocks")) {
    const auto& arr = as_array(*clocks, "clocks");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index("clocks", i);
      expect_object(arr[i], p);
      env.sync.add_clock(Clock{req_string(arr[i], "id", p), opt_string(arr[i], "owner", p)});
    }
  }
  if (const json* sync = field(root, "sync")) {
    const auto& arr = as_array(*sync, "sync");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index("sync", i);
      expect_object(arr[i], p);
      env.sync.add_map(ClockMap{req_string(arr[i], "from", p), req_string(arr[i], "to", p),
                                opt_rational(arr[i], "rate", p, 1), opt_rational(arr[i], "offset", p, 0)});
    }
  }

  if (const json* ops = field(root, "operators")) {
    const auto& arr = as_array(*ops, "operators");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index("operators", i);
      expect_object(arr[i], p);
      CompositionOp op;
      op.name = req_string(arr[i], "name", p);
      const json* arity = field(arr[i], "arity");
      if (!arity || !arity->is_number_unsigned() || arity->get<std::size_t>() == 0) {
        fail(join(p, "arity"), "expected a positive integer");
      }
      op.arity = arity->get<std::size_t>();
      op.ea_compliant = opt_bool(arr[i], "ea_compliant", p, true);
      op.alternatives = string_list(arr[i], "alternatives", p);
      env.operators.push_back(std::move(op));
    }
  }

  if (const json* actions = field(root, "actions")) {
    env.actions = CatalogBuilder(*actions, env.operators, "actions").build();
  }

  if (const json* actors = field(root, "actors")) {
    const auto& arr = as_array(*actors, "actors");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index("actors", i);
      env.actors.push_back(parse_actor(arr[i], p));
      const json& a = arr[i];
      if (field(a, "vreact") || field(a, "vproact")) {
        const auto& spec = env.actors.back();
        ExtendedRelations ext{field(a, "vreact") ? pair_list(a, "vreact", p) : spec.react,
                              field(a, "vproact") ? pair_list(a, "vproact", p) : spec.proact};
        env.extended[spec.name] = std::move(ext);
      }
    }
  }

  if (const json* u = field(root, "universes")) {
    expect_object(*u, "universes");
    if (field(*u, "relp")) {
      env.relp = string_set(*u, "relp", "universes");
    } else {
      for (const auto& a : env.actors) {
        for (const auto& r : a.rel) env.relp.insert(r.id);
      }
    }
    if (field(*u, "actp")) {
      env.actp = string_set(*u, "actp", "universes");
    } else {
      for (const auto& [id, _] : env.actions) env.actp.insert(id);
    }
  } else {
    for (const auto& a : env.actors) {
      for (const auto& r : a.rel) env.relp.insert(r.id);
    }
    for (const auto& [id, _] : env.actions) env.actp.insert(id);
  }
  env.trn = string_set(root, "trn", "");
  env.ereact = pair_list(root, "ereact", "");
  env.eproact = pair_list(root, "eproact", "");

  if (const json* mods = field(root, "modalities")) {
    const auto& arr = as_array(*mods, "modalities");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index("modalities", i);
      expect_object(arr[i], p);
      env.modalities.insert(ModalityAssertion{
          req_string(arr[i], "action", p),
          parse_enum(arr[i], "modality", p, Modality::unknown, modality_from_string)});
    }
  }

  if (const json* domain = field(root, "domain")) {
    expect_object(*domain, "domain");
    env.domain.objects = string_list(*domain, "objects", "domain");
    if (const json* model = field(*domain, "model")) {
      expect_object(*model, "domain.model");
      for (const auto& [obj, actor] : model->items()) {
        env.domain.model[obj] = as_string(actor, "domain.model." + obj);
      }
    }
  }

  if (const json* events = field(root, "events")) {
    const auto& arr = as_array(*events, "events");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      EventRecord e = parse_event(arr[i], index("events", i));
      if (e.clock().empty()) {
        if (const ActorSpec* owner = env.find(e.actor)) e.time = TimeSet(owner->local_clock(), e.time.pieces());
      }
      doc.events.push_back(std::move(e));
    }
  }
  if (const json* sim = field(root, "sim")) doc.sim = parse_sim(*sim, "sim");
  return doc;
}

SpecDocument parse_spec(std::string_view text) {
  SpecDocument doc = parse_spec_unchecked(text);
  ViolationList problems = validate_environment(doc.env).violations;
  for (auto& v : validate_config(doc.sim)) problems.push_back(std::move(v));
  const SyncGraph sync = doc.env.full_sync();
  std::set<std::string> ids;
  for (const auto& e : doc.events) ids.insert(e.id);
  for (const auto& e : doc.events) {
    const std::string p = "events." + e.id;
    if (!doc.env.find(e.actor)) problems.push_back({"event.actor", p, "unknown actor '" + e.actor + "'"});
    if (!doc.env.find_action(e.action)) problems.push_back({"event.action", p, "unknown action '" + e.action + "'"});
    if (e.time.empty()) problems.push_back({"event.time", p, "empty time set"});
    if (!e.clock().empty() && !sync.has_clock(e.clock())) {
      problems.push_back({"event.clock", p, "unknown clock '" + e.clock() + "'"});
    }
    for (const auto& d : e.depends_on) {
      if (!ids.count(d)) problems.push_back({"event.depends_on", p, "unknown event '" + d + "'"});
    }
  }
  if (ids.size() != doc.events.size()) problems.push_back({"event.id", "events", "duplicate event id"});
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return doc;
}

std::string serialize_spec(const SpecDocument& doc) {
  const Environment& env = doc.env;
  json root;
  root["version"] = kSpecVersion;
  root["environment"] = env.name;
  root["laws"] = laws_to_json(env.laws);

  json clocks = json::array();
  for (const auto& c : env.sync.clocks()) clocks.push_back(json{{"id", c.id}, {"owner", c.owner}});
  root["clocks"] = clocks;
  json sync = json::array();
  for (const auto& m : env.sync.maps()) {
    sync.push_back(json{{"from", m.from}, {"to", m.to}, {"rate", format_rational(m.rate)},
                        {"offset", format_rational(m.offset)}});
  }
  root["sync"] = sync;

  json ops = json::array();
  for (const auto& op : env.operators) {
    ops.push_back(json{{"name", op.name}, {"arity", op.arity}, {"ea_compliant", op.ea_compliant},
                       {"alternatives", list_to_json(op.alternatives)}});
  }
  root["operators"] = ops;

  json actions = json::array();
  for (const auto& [id, a] : env.actions) {
    json entry{{"id", id}};
    if (a.kind() == Action::Kind::atomic && a.name() == id) {
      attributes_to_json(a.attributes(), entry);
    } else {
      entry["term"] = term_to_json(a);
    }
    actions.push_back(entry);
  }
  root["actions"] = actions;

  json actors = json::array();
  for (const auto& a : env.actors) {
    json j = actor_to_json(a);
    if (const auto it = env.extended.find(a.name); it != env.extended.end()) {
      j["vreact"] = pairs_to_json(it->second.vreact);
      j["vproact"] = pairs_to_json(it->second.vproact);
    }
    actors.push_back(j);
  }
  root["actors"] = actors;
  root["universes"] = json{{"relp", list_to_json(env.relp)}, {"actp", list_to_json(env.actp)}};
  root["trn"] = list_to_json(env.trn);
  root["ereact"] = pairs_to_json(env.ereact);
  root["eproact"] = pairs_to_json(env.eproact);

  json mods = json::array();
  for (const auto& m : env.modalities) {
    mods.push_back(json{{"action", m.action}, {"modality", std::string(to_string(m.modality))}});
  }
  root["modalities"] = mods;

  json model = json::object();
  for (const auto& [obj, actor] : env.domain.model) model[obj] = actor;
  root["domain"] = json{{"objects", list_to_json(env.domain.objects)}, {"model", model}};

  json events = json::array();
  for (const auto& e : doc.events) events.push_back(event_to_json(e));
  root["events"] = events;
  root["sim"] = sim_to_json(doc.sim);
  return root.dump(2) + "\n";
}

SpecDocument load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.location().empty() ? path : path + ": " + e.location(), e.message());
  }
}

}  // namespace sam
