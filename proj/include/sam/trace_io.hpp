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

namespace sam {

/// Line-oriented trace text. Header lines start with `#`; each event is one
/// LF-terminated line of tab-separated fields:
///
///   id  actor  action  clock  time-set  kind  depends-on
///
/// `kind` is `initial`, `actualize`, `receive:<send-id>`, or
/// `reaction|proaction:<timing>:<trigger-id>`; `depends-on` is a
/// comma-separated id list or `-`.
std::string write_trace(const Trace& trace);

/// A file may hold several traces (one per enumerated branch), each opened
/// by a `# sam-trace` header line. Throws ParseError with the offending line.
std::vector<Trace> parse_traces(std::string_view text);
/// Exactly one trace.
Trace parse_trace(std::string_view text);

std::vector<Trace> load_trace_file(const std::string& path);

}  // namespace sam
