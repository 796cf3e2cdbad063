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

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sam/error.hpp"
#include "sam/model.hpp"
#include "sam/temporal.hpp"

namespace sam {

enum class LawStatus { pass, fail, not_applicable };
std::string_view to_string(LawStatus s);

struct LawCheckResult {
  std::string law;
  LawStatus status = LawStatus::pass;
  /// Non-empty iff status is fail.
  ViolationList witnesses;
  std::string note;
};

struct LawInfo {
  std::string id;
  std::string title;
  /// Holds by representation; still executed.
  bool by_construction = false;
};

/// Every registered law in report order.
const std::vector<LawInfo>& law_registry();

/// Runs the selected checks in registry order; "all" selects every law.
/// Temporal laws range over `events`. Throws NameError on an unknown id.
std::vector<LawCheckResult> run_law_suite(const Environment& env, const std::set<std::string>& selection,
                                          std::span<const EventRecord> events = {});

}  // namespace sam
