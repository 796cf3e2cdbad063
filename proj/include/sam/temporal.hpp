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
#include <vector>

#include "sam/error.hpp"
#include "sam/rational.hpp"

namespace sam {

struct Clock {
  std::string id;
  /// Actor name, or the environment name for an environment clock.
  std::string owner;

  friend bool operator==(const Clock&, const Clock&) = default;
};

/// Affine synchronization `to = rate * from + offset`, rate > 0.
struct ClockMap {
  std::string from;
  std::string to;
  Rational rate = 1;
  Rational offset = 0;

  Rational apply(const Rational& t) const { return rate * t + offset; }
  ClockMap inverse() const;
  /// `then` after `*this`; requires `then.from == to`.
  ClockMap then(const ClockMap& next) const;
  bool is_identity() const { return rate == 1 && offset == 0; }

  friend bool operator==(const ClockMap&, const ClockMap&) = default;
};

struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals on one clock, kept sorted with touching
/// or overlapping pieces merged.
class TimeSet {
 public:
  TimeSet() = default;
  /// Throws Error if some piece has lo > hi.
  TimeSet(std::string clock, std::vector<Interval> pieces);

  static TimeSet moment(std::string clock, Rational t);
  static TimeSet interval(std::string clock, Rational lo, Rational hi);

  const std::string& clock() const { return clock_; }
  const std::vector<Interval>& pieces() const { return pieces_; }

  bool empty() const { return pieces_.empty(); }
  /// Least point. Requires non-empty.
  const Rational& start() const { return pieces_.front().lo; }
  /// Greatest point. Requires non-empty.
  const Rational& end() const { return pieces_.back().hi; }
  bool momentary() const { return pieces_.size() == 1 && start() == end(); }
  bool is_interval() const { return pieces_.size() == 1; }
  bool has_positive_duration() const { return !empty() && end() > start(); }

  /// Both sets must be on the same clock.
  TimeSet intersect(const TimeSet& other) const;
  bool intersects(const TimeSet& other) const { return !intersect(other).empty(); }
  TimeSet shifted(const Rational& delta) const;

  /// `[0,1],[4,7]`; a moment prints as `[2,2]`.
  std::string to_string() const;
  static TimeSet parse(std::string clock, std::string_view text);

  friend bool operator==(const TimeSet&, const TimeSet&) = default;

 private:
  std::string clock_;
  std::vector<Interval> pieces_;
};

/// Clocks and the synchronization maps between them. Maps are usable in both
/// directions.
class SyncGraph {
 public:
  SyncGraph() = default;
  SyncGraph(std::vector<Clock> clocks, std::vector<ClockMap> maps);

  void add_clock(Clock clock);
  void add_map(ClockMap map);

  const std::vector<Clock>& clocks() const { return clocks_; }
  const std::vector<ClockMap>& maps() const { return maps_; }
  bool has_clock(const std::string& id) const;
  const Clock* find_clock(const std::string& id) const;

  /// Composition of maps along a path, or nullopt when the clocks lie in
  /// different components.
  std::optional<ClockMap> path_map(const std::string& from, const std::string& to) const;
  bool connected(const std::string& a, const std::string& b) const;
  /// Smallest clock id of the component containing `clock`.
  std::string component_of(const std::string& clock) const;

  /// Duplicate ids, unknown endpoints, non-positive rates, and cycles whose
  /// composed map is not the identity.
  ViolationList check_consistency() const;

  friend bool operator==(const SyncGraph& a, const SyncGraph& b) {
    return a.clocks_ == b.clocks_ && a.maps_ == b.maps_;
  }

 private:
  struct Edge {
    std::string to;
    ClockMap map;
  };
  std::vector<Edge> neighbours(const std::string& clock) const;

  std::vector<Clock> clocks_;
  std::vector<ClockMap> maps_;
};

/// Throws IncomparableError when no synchronization path exists.
TimeSet map_to_clock(const TimeSet& ts, const std::string& target, const SyncGraph& sync);

// Events ----------------------------------------------------------------------

enum class EventKind { initial, actualize, receive, reaction, proaction };
enum class Timing { sharp, reserved, delayed };

std::string_view to_string(EventKind k);
std::string_view to_string(Timing t);
std::optional<EventKind> event_kind_from_string(std::string_view s);
std::optional<Timing> timing_from_string(std::string_view s);

struct EventRecord {
  std::string id;
  std::string actor;
  /// Action id, or the relation id for an `actualize` event.
  std::string action;
  TimeSet time;
  std::set<std::string> depends_on;
  EventKind kind = EventKind::initial;
  /// Reactions and proactions only.
  std::optional<Timing> timing;
  /// Reaction/proaction: the triggering event. Receive: the send event.
  std::string trigger;

  const std::string& clock() const { return time.clock(); }

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Undirected closure of `depends_on` edges. Two events are dependent iff
/// they share a component.
class CausalGraph {
 public:
  explicit CausalGraph(std::span<const EventRecord> events);

  bool dependent(const std::string& a, const std::string& b) const;

 private:
  std::string find(const std::string& id) const;

  mutable std::map<std::string, std::string> parent_;
};

bool comparable(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);
/// Uses only the two events' own dependency edges.
bool independent(const EventRecord& e1, const EventRecord& e2);
bool independent(const EventRecord& e1, const EventRecord& e2, const CausalGraph& causal);
bool concurrent(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);
bool concurrent(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync,
                const CausalGraph& causal);

/// Common intersection of all time sets after mapping to the first event's
/// clock. Throws IncomparableError if any pair is incomparable.
bool parallel(std::span<const EventRecord> events, const SyncGraph& sync);
bool parallel(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);
bool strictly_parallel(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);
/// e2 starts at or after the end of e1.
bool sequential(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);
/// e2 starts exactly when e1 ends.
bool strictly_sequential(const EventRecord& e1, const EventRecord& e2, const SyncGraph& sync);

/// Checks every event carrying a timing class against its trigger:
/// sharp starts with the trigger, reserved starts exactly at its end, delayed
/// starts strictly after its end. Throws ReferenceError on a dangling trigger.
ViolationList reaction_timing_check(std::span<const EventRecord> trace, const SyncGraph& sync);

}  // namespace sam
