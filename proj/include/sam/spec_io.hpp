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

#include <string>
#include <string_view>
#include <vector>

#include "sam/engine.hpp"
#include "sam/model.hpp"
#include "sam/temporal.hpp"

namespace sam {

/// Everything one `.sam` document describes.
struct SpecDocument {
  Environment env;
  SimConfig sim;
  std::vector<EventRecord> events;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

inline constexpr int kSpecVersion = 1;

/// Parses a `.sam` document (JSON, `//` comments allowed). Throws ParseError
/// with `line N, column M` for syntax errors and a field path for schema
/// errors, and ValidationError when the result breaks an invariant.
SpecDocument parse_spec(std::string_view text);
/// Same, without the final validation step.
SpecDocument parse_spec_unchecked(std::string_view text);

/// Canonical document text. parse_spec(serialize_spec(d)) == d.
std::string serialize_spec(const SpecDocument& doc);

SpecDocument load_spec_file(const std::string& path);

}  // namespace sam
