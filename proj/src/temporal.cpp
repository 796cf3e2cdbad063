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

#include "sam/temporal.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace sam {

// ClockMap --------------------------------------------------------------------

ClockMap ClockMap::inverse() const {
  return ClockMap{to, from, Rational(1) / rate, -offset / rate};
}

ClockMap ClockMap::then(const ClockMap& next) const {
  return ClockMap{from, next.to, next.rate * rate, next.rate * offset + next.offset};
}

// TimeSet ---------------------------------------------------------------------

TimeSet::TimeSet(std::string clock, std::vector<Interval> pieces) : clock_(std::move(clock)) {
  for (const auto& p : pieces) {
    if (p.lo > p.hi) {
      throw Error("interval [" + format_rational(p.lo) + "," + format_rational(p.hi) +
                  "] has lo > hi");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
      if (p.hi > pieces_.back().hi) pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

TimeSet TimeSet::moment(std::string clock, Rational t) {
  return TimeSet(std::move(clock), {Interval{t, t}});
}

TimeSet TimeSet::interval(std::string clock, Rational lo, Rational hi) {
  return TimeSet(std::move(clock), {Interval{std::move(lo), std::move(hi)}});
}

TimeSet TimeSet::intersect(const TimeSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const auto& a = pieces_[i];
    const auto& b = other.pieces_[j];
    const Rational lo = std::max(a.lo, b.lo);
    const Rational hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return TimeSet(clock_, std::move(out));
}

TimeSet TimeSet::shifted(const Rational& delta) const {
  TimeSet out = *this;
  for (auto& p : out.pieces_) {
    p.lo += delta;
    p.hi += delta;
  }
  return out;
}

std::string TimeSet::to_string() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += ",";
    out += "[" + format_rational(p.lo) + "," + format_rational(p.hi) + "]";
  }
  return out;
}

TimeSet TimeSet::parse(std::string clock, std::string_view text) {
  std::vector<Interval> pieces;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("", "time set '" + std::string(text) + "': " + what);
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '[') fail("expected '['");
    const auto comma = text.find(',', pos);
    const auto close = text.find(']', pos);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      fail("expected '[lo,hi]'");
    }
    Rational lo = parse_rational(text.substr(pos + 1, comma - pos - 1));
    Rational hi = parse_rational(text.substr(comma + 1, close - comma - 1));
    if (lo > hi) fail("lo > hi");
    pieces.push_back({std::move(lo), std::move(hi)});
    pos = close + 1;
    skip_space();
    if (pos < text.size()) {
      if (text[pos] != ',') fail("expected ',' between intervals");
      ++pos;
      skip_space();
    }
  }
  return TimeSet(std::move(clock), std::move(pieces));
}

// SyncGraph -------------------------------------------------------------------

SyncGraph::SyncGraph(std::vector<Clock> clocks, std::vector<ClockMap> maps)
    : clocks_(std::move(clocks)), maps_(std::move(maps)) {}

void SyncGraph::add_clock(Clock clock) { clocks_.push_back(std::move(clock)); }
void SyncGraph::add_map(ClockMap map) { maps_.push_back(std::move(map)); }

bool SyncGraph::has_clock(const std::string& id) const { return find_clock(id) != nullptr; }

const Clock* SyncGraph::find_clock(const std::string& id) const {
  for (const auto& c : clocks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<SyncGraph::Edge> SyncGraph::neighbours(const std::string& clock) const {
  std::vector<Edge> out;
  for (const auto& m : maps_) {
    if (m.rate <= 0) continue;
    if (m.from == clock) out.push_back({m.to, m});
    if (m.to == clock) out.push_back({m.from, m.inverse()});
  }
  return out;
}

std::optional<ClockMap> SyncGraph::path_map(const std::string& from, const std::string& to) const {
  std::map<std::string, ClockMap> reached{{from, ClockMap{from, from}}};
  std::deque<std::string> frontier{from};
  while (!frontier.empty()) {
    const std::string at = frontier.front();
    frontier.pop_front();
    if (at == to) return reached.at(at);
    for (const auto& e : neighbours(at)) {
      if (reached.count(e.to)) continue;
      reached.emplace(e.to, reached.at(at).then(e.map));
      frontier.push_back(e.to);
    }
  }
  return std::nullopt;
}

bool SyncGraph::connected(const std::string& a, const std::string& b) const {
  return path_map(a, b).has_value();
}

std::string SyncGraph::component_of(const std::string& clock) const {
  std::set<std::string> seen{clock};
  std::deque<std::string> frontier{clock};
  while (!frontier.empty()) {
    const std::string at = frontier.front();
    frontier.pop_front();
    for (const auto& e : neighbours(at)) {
      if (seen.insert(e.to).second) frontier.push_back(e.to);
    }
  }
  return *seen.begin();
}

ViolationList SyncGraph::check_consistency() const {
  ViolationList out;
  std::set<std::string> ids;
  for (const auto& c : clocks_) {
    if (c.id.empty()) out.push_back({"clock.id", "clocks", "empty clock id"});
    if (!ids.insert(c.id).second) out.push_back({"clock.id", "clocks." + c.id, "duplicate clock id"});
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto& m = maps_[i];
    const std::string path = "sync[" + std::to_string(i) + "]";
    if (!ids.count(m.from)) out.push_back({"sync.endpoint", path, "unknown clock '" + m.from + "'"});
    if (!ids.count(m.to)) out.push_back({"sync.endpoint", path, "unknown clock '" + m.to + "'"});
    if (m.rate <= 0) out.push_back({"sync.rate", path, "rate must be positive"});
  }
  if (!out.empty()) return out;

  // Every clock gets the map from its component root; each edge must agree.
  std::map<std::string, ClockMap> potential;
  for (const auto& c : clocks_) {
    if (potential.count(c.id)) continue;
    potential.emplace(c.id, ClockMap{c.id, c.id});
    std::deque<std::string> frontier{c.id};
    while (!frontier.empty()) {
      const std::string at = frontier.front();
      frontier.pop_front();
      for (const auto& e : neighbours(at)) {
        if (potential.count(e.to)) continue;
        potential.emplace(e.to, potential.at(at).then(e.map));
        frontier.push_back(e.to);
      }
    }
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto& m = maps_[i];
    const ClockMap via_edge = potential.at(m.from).then(m);
    const ClockMap& direct = potential.at(m.to);
    if (via_edge.rate != direct.rate || via_edge.offset != direct.offset) {
      out.push_back({"sync.cycle", "sync[" + std::to_string(i) + "]",
                     "cycle through " + m.from + "->" + m.to + " does not compose to identity"});
    }
  }
  return out;
}

TimeSet map_to_clock(const TimeSet& ts, const std::string& target, const SyncGraph& sync) {
  if (ts.clock() == target) return ts;
  const auto m = sync.path_map(ts.clock(), target);
  if (!m) {
    throw IncomparableError("clocks '" + ts.clock() + "' and '" + target + "' are not synchronized");
  }
  std::vector<Interval> pieces;
  pieces.reserve(ts.pieces().size());
  for (const auto& p : ts.pieces()) pieces.push_back({m->apply(p.lo), m->apply(p.hi)});
  return TimeSet(target, std::move(pieces));
}

// Events ----------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<std::string_view, EventKind>, 5> kEventKinds{{
    {"initial", EventKind::initial},
    {"actualize", EventKind::actualize},
    {"receive", EventKind::receive},
    {"reaction", EventKind::reaction},
    {"proaction", EventKind::proaction},
}};

constexpr std::array<std::pair<std::string_view, Timing>, 3> kTimings{{
    {"sharp", Timing::sharp},
    {"reserved", Timing::reserved},
    {"delayed", Timing::delayed},
}};

// Both time sets on e1's clock.
std::pair<TimeSet, TimeSet> aligned(const EventRecord& e1, const EventRecord& e2,
                                    const SyncGraph& sync) {
  return {e1.time, map_to_clock(e2.time, e1.clock(), sync)};
}

}  // namespace

std::string_view to_string(EventKind k) {
  for (const auto& [name, value] : kEventKinds) {
    if (value == k) return name;
  }
  return "?";
}

std::string_view to_string(Timing t) {
  for (const auto& [name, value] : kTimings) {
    if (value == t) return name;
  }
  return "?";
}

std::optional<EventKind> event_kind_from_string(std::string_view s) {
  for (const auto& [name, value] : kEventKinds) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::optional<Timing> timing_from_string(std::string_view s) {
  for (const auto& [name, value] : kTimings) {
    if (name == s) return value;
  }
  return std::nullopt;
}

CausalGraph::CausalGraph(std::span<const EventRecord> events) {
  for (const auto& e : events) {
    parent_.try_emplace(e.id, e.id);
    for (const auto& d : e.depends_on) parent_.try_emplace(d, d);
  }
  for (const auto& e : events) {
    for (const auto& d : e.depends_on) {
      const auto a = find(e.id);
      const auto b = find(d);
      if (a != b) parent_[a] = b;
    }
  }
}

std::string CausalGraph::find(const std::string& id) const {
  auto it = parent_.find(id);
  if (it == parent_.end()) return id;
  std::string root = id;
  while (parent_.at(root) != root) root = parent_.at(root);
  std::string at = id;
  while (parent_.at(at) != root) {
    auto next = parent_.at(at);
    parent_[at] = root;
    at = next;
  }
  return root;
}

bool CausalGraph::dependent(const std::string& a, const std::string& b) const {
  return find(a) == find(b);
}

bool comparable(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  return e1.clock() == e2.clock() || sync.connected(e1.clock(), e2.clock());
}

bool independent(const EventRecord& e1, const EventRecord& e2) {
  const std::array<EventRecord, 2> pair{e1, e2};
  return independent(e1, e2, CausalGraph(pair));
}

bool independent(const EventRecord& e1, const EventRecord& e2, const CausalGraph& causal) {
  return !causal.dependent(e1.id, e2.id);
}

bool concurrent(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  return independent(e1, e2) || !comparable(e1, e2, sync);
}

bool concurrent(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync,
                const CausalGraph& causal) {
  return independent(e1, e2, causal) || !comparable(e1, e2, sync);
}

bool parallel(std::span<const EventRecord> events, const SyncGraph& sync) {
  if (events.empty()) return true;
  TimeSet common = events.front().time;
  for (const auto& e : events.subspan(1)) {
    common = common.intersect(map_to_clock(e.time, common.clock(), sync));
  }
  return !common.empty();
}

bool parallel(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  const auto [a, b] = aligned(e1, e2, sync);
  return a.intersects(b);
}

bool strictly_parallel(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  const auto [a, b] = aligned(e1, e2, sync);
  return a == b;
}

bool sequential(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  const auto [a, b] = aligned(e1, e2, sync);
  return b.start() >= a.end();
}

bool strictly_sequential(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync) {
  const auto [a, b] = aligned(e1, e2, sync);
  return b.start() == a.end();
}

ViolationList reaction_timing_check(std::span<const EventRecord> trace, const SyncGraph& sync) {
  std::map<std::string, const EventRecord*> by_id;
  for (const auto& e : trace) by_id.emplace(e.id, &e);

  ViolationList out;
  for (const auto& e : trace) {
    if (!e.timing) continue;
    const auto it = by_id.find(e.trigger);
    if (it == by_id.end()) {
      throw ReferenceError("event '" + e.id + "' references unknown trigger '" + e.trigger + "'");
    }
    const EventRecord& trigger = *it->second;
    if (!comparable(trigger, e, sync)) {
      out.push_back({"timing.comparable", e.id,
                     "reaction and trigger " + trigger.id + " are on unsynchronized clocks"});
      continue;
    }
    const auto [t, r] = aligned(trigger, e, sync);
    switch (*e.timing) {
      case Timing::sharp:
        if (r.start() != t.start()) {
          out.push_back({"timing.sharp", e.id,
                         "starts at " + format_rational(r.start()) + ", trigger " + trigger.id +
                             " starts at " + format_rational(t.start())});
        } else if (!trigger.time.momentary() && !t.intersects(r)) {
          out.push_back({"timing.sharp.parallel", e.id, "not parallel to trigger " + trigger.id});
        }
        break;
      case Timing::reserved:
        if (r.start() != t.end()) {
          out.push_back({"timing.reserved", e.id,
                         "starts at " + format_rational(r.start()) + ", trigger " + trigger.id +
                             " ends at " + format_rational(t.end())});
        }
        break;
      case Timing::delayed:
        if (r.start() <= t.end()) {
          out.push_back({"timing.delayed", e.id,
                         "starts at " + format_rational(r.start()) + ", not after trigger " +
                             trigger.id + " ending at " + format_rational(t.end())});
        }
        break;
    }
  }
  return out;
}

}  // namespace sam
