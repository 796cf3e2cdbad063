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

#include "sam/trace_io.hpp"

#include <fstream>
#include <sstream>

namespace sam {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string kind_field(const EventRecord& e) {
  switch (e.kind) {
    case EventKind::initial:
    case EventKind::actualize:
      return std::string(to_string(e.kind));
    case EventKind::receive:
      return "receive:" + e.trigger;
    case EventKind::reaction:
    case EventKind::proaction:
      return std::string(to_string(e.kind)) + ":" + std::string(to_string(e.timing.value_or(Timing::sharp))) +
             ":" + e.trigger;
  }
  return {};
}

}  // namespace

std::string write_trace(const Trace& trace) {
  std::ostringstream out;
  out << "# sam-trace 1\n";
  out << "# branch " << trace.branch_id << "\n";
  out << "# truncated " << (trace.truncated ? "yes" : "no") << "\n";
  for (const auto& [send, recv] : trace.messages) out << "# message " << send << " " << recv << "\n";
  for (const auto& e : trace.events) {
    std::string deps;
    for (const auto& d : e.depends_on) deps += (deps.empty() ? "" : ",") + d;
    out << e.id << '\t' << e.actor << '\t' << e.action << '\t' << (e.clock().empty() ? "-" : e.clock()) << '\t'
        << e.time.to_string() << '\t' << kind_field(e) << '\t' << (deps.empty() ? "-" : deps) << '\n';
  }
  return out.str();
}

std::vector<Trace> parse_traces(std::string_view text) {
  std::vector<Trace> traces;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    if (raw.rfind("# sam-trace", 0) == 0 || traces.empty()) traces.emplace_back();
    Trace& trace = traces.back();
    const std::string where = "line " + std::to_string(line_no);
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream words{std::string(line.substr(1))};
      std::string key;
      words >> key;
      if (key == "branch") {
        if (!(words >> trace.branch_id)) throw ParseError(where, "missing branch id");
      } else if (key == "truncated") {
        std::string v;
        words >> v;
        if (v != "yes" && v != "no") throw ParseError(where, "expected 'yes' or 'no'");
        trace.truncated = v == "yes";
      } else if (key == "message") {
        std::string send, recv;
        if (!(words >> send >> recv)) throw ParseError(where, "expected '# message <send> <receive>'");
        trace.messages.emplace_back(send, recv);
      }
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 7) {
      throw ParseError(where, "expected 7 tab-separated fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < 7; ++i) {
      if (fields[i].empty()) throw ParseError(where, "empty field " + std::to_string(i + 1));
    }
    EventRecord e;
    e.id = fields[0];
    e.actor = fields[1];
    e.action = fields[2];
    const std::string clock = fields[3] == "-" ? std::string() : fields[3];
    try {
      e.time = TimeSet::parse(clock, fields[4]);
    } catch (const Error& err) {
      throw ParseError(where, std::string("bad time set: ") + err.what());
    }
    const auto kind = split(fields[5], ':');
    const auto k = event_kind_from_string(kind[0]);
    if (!k) throw ParseError(where, "unknown event kind '" + kind[0] + "'");
    e.kind = *k;
    switch (e.kind) {
      case EventKind::initial:
      case EventKind::actualize:
        if (kind.size() != 1) throw ParseError(where, "unexpected kind arguments");
        break;
      case EventKind::receive:
        if (kind.size() != 2 || kind[1].empty()) throw ParseError(where, "expected receive:<send-id>");
        e.trigger = kind[1];
        break;
      case EventKind::reaction:
      case EventKind::proaction: {
        if (kind.size() != 3 || kind[2].empty()) throw ParseError(where, "expected <kind>:<timing>:<trigger-id>");
        const auto t = timing_from_string(kind[1]);
        if (!t) throw ParseError(where, "unknown timing '" + kind[1] + "'");
        e.timing = *t;
        e.trigger = kind[2];
        break;
      }
    }
    if (fields[6] != "-") {
      for (const auto& d : split(fields[6], ',')) {
        if (d.empty()) throw ParseError(where, "empty dependency id");
        e.depends_on.insert(d);
      }
    }
    trace.events.push_back(std::move(e));
  }
  if (traces.empty()) traces.emplace_back();
  return traces;
}

Trace parse_trace(std::string_view text) {
  auto traces = parse_traces(text);
  if (traces.size() != 1) throw ParseError("", "expected one trace, found " + std::to_string(traces.size()));
  return std::move(traces.front());
}

std::vector<Trace> load_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_traces(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.location().empty() ? path : path + ": " + e.location(), e.message());
  }
}

}  // namespace sam
