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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sam/model.hpp"
#include "sam/temporal.hpp"

namespace sam {

enum class SimMode { sampled, enumerate_all };
enum class ViolationPolicy { drop, error };

std::string_view to_string(SimMode m);
std::optional<SimMode> sim_mode_from_string(std::string_view s);

struct TimingRule {
  Timing timing = Timing::sharp;
  /// Only for delayed reactions; must be positive.
  Rational delay = 0;

  friend bool operator==(const TimingRule&, const TimingRule&) = default;
};

struct SimConfig {
  std::uint64_t seed = 0;
  SimMode mode = SimMode::sampled;
  std::size_t max_steps = 1000;
  /// Per (sender, receiver), in the receiver's clock. Missing pairs: 0.
  std::map<std::pair<ActorName, ActorName>, Rational> delivery_delay;
  ViolationPolicy violation_policy = ViolationPolicy::drop;
  /// Per (actor, transaction or relation id). Missing keys: sharp.
  std::map<std::pair<ActorName, std::string>, TimingRule> timing;
  /// Upper bound on enumerated branches.
  std::size_t max_branches = 4096;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Delayed rules with non-positive delays and negative delivery delays.
ViolationList validate_config(const SimConfig& config);

struct Trace {
  std::vector<EventRecord> events;
  /// (send event id, receive event id) in delivery order.
  std::vector<std::pair<std::string, std::string>> messages;
  /// Dot-separated choice indices, or "-" when no choice was made.
  std::string branch_id = "-";
  /// Stopped at max_steps with work still pending.
  bool truncated = false;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Sampled mode yields one trace; enumerate_all yields every resolution of
/// the multivalued choices, ordered by branch id. Throws ValidationError if
/// the environment or config is invalid and RunError on an illegal messenger
/// under the `error` policy.
std::vector<Trace> run(const Environment& env, const SimConfig& config,
                       const std::vector<EventRecord>& initial);

/// Re-executes one enumerated branch.
Trace run_branch(const Environment& env, const SimConfig& config,
                 const std::vector<EventRecord>& initial, const std::string& branch_id);

/// Legal message edges, causal and temporal order of deliveries, reaction
/// timing classes, that reactions are images of their trigger, and that
/// singular actions are momentary and regular ones are not.
ViolationList check_trace(const Trace& trace, const Environment& env, const SyncGraph& sync);
ViolationList check_trace(const Trace& trace, const Environment& env);

struct ReplayResult {
  bool identical = true;
  /// Index of the first differing event, or of the first missing one.
  std::optional<std::size_t> first_divergence;
  std::string detail;
};

/// Re-runs (sampled by seed, or the trace's branch in enumerate_all mode) and
/// compares event for event.
ReplayResult replay(const Environment& env, const SimConfig& config,
                    const std::vector<EventRecord>& initial, const Trace& trace);

}  // namespace sam
