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

// Command-line front end: validate, check, classify, compare, relate,
// simulate and trace-check over `.sam` documents.
//
// Exit status: 0 success/pass, 1 violations found, 2 usage or parse error.

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sam/engine.hpp"
#include "sam/equivalence.hpp"
#include "sam/laws.hpp"
#include "sam/spec_io.hpp"
#include "sam/trace_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

class UsageError : public sam::Error {
 public:
  using sam::Error::Error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_violations(std::ostream& os, const sam::ViolationList& list, std::string_view prefix) {
  for (const auto& v : list) os << prefix << v << "\n";
}

int cmd_validate(const std::string& spec) {
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  const auto report = sam::validate_environment(doc.env);
  print_violations(std::cout, report.warnings, "warning: ");
  std::cout << "valid: environment " << doc.env.name << ", " << doc.env.actors.size() << " actors, "
            << doc.events.size() << " events\n";
  return kOk;
}

int cmd_check(const std::string& spec, const std::string& laws) {
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  std::set<std::string> selection;
  for (const auto& id : split_list(laws)) selection.insert(id);
  if (selection.empty()) selection.insert("all");
  std::size_t counts[3] = {0, 0, 0};
  bool failed = false;
  for (const auto& r : sam::run_law_suite(doc.env, selection, doc.events)) {
    ++counts[static_cast<int>(r.status)];
    failed = failed || r.status == sam::LawStatus::fail;
    std::cout << r.law << "\t" << sam::to_string(r.status);
    if (!r.note.empty()) std::cout << "\t" << r.note;
    std::cout << "\n";
    print_violations(std::cout, r.witnesses, "  witness: ");
  }
  std::cout << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " not_applicable\n";
  return failed ? kViolations : kOk;
}

std::string flags(const sam::StructuralClass& s) {
  std::string out;
  const auto add = [&](bool on, const char* name) {
    if (on) out += (out.empty() ? "" : " ") + std::string(name);
  };
  add(s.prime, "prime");
  add(s.primitive, "primitive");
  add(s.composite, "composite");
  add(s.compound, "compound");
  return out.empty() ? "-" : out;
}

std::string flags(const sam::CommunicationClass& c) {
  std::string out;
  const auto add = [&](bool on, const char* name) {
    if (on) out += (out.empty() ? "" : " ") + std::string(name);
  };
  add(c.closed, "closed");
  add(c.inactive, "inactive");
  add(c.non_receptive, "non_receptive");
  add(c.open, "open");
  add(c.undemanding, "undemanding");
  add(c.active, "active");
  add(c.receptive, "receptive");
  return out.empty() ? "-" : out;
}

int cmd_classify(const std::string& spec, const std::string& actor) {
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  bool broken = false;
  for (const auto& a : doc.env.actors) {
    if (!actor.empty() && a.name != actor) continue;
    const auto r = sam::classify(a, doc.env);
    std::cout << "actor " << r.actor << "\n"
              << "  behavioral: " << sam::to_string(r.behavioral) << "\n"
              << "  structural: " << flags(r.structural) << "\n"
              << "  communication: " << flags(r.communication) << "\n"
              << "  primary: " << (r.primary ? "yes" : "no") << "\n";
    const auto lattice = sam::check_report_lattice(r);
    print_violations(std::cout, lattice, "  violation: ");
    broken = broken || !lattice.empty();
  }
  if (!actor.empty()) doc.env.actor(actor);
  return broken ? kViolations : kOk;
}

void print_map(const char* label, const std::map<std::string, std::string>& m) {
  for (const auto& [from, to] : m) std::cout << "  " << label << " " << from << " -> " << to << "\n";
}

int cmd_compare(const std::string& spec, const std::string& actors, const std::string& relation) {
  const auto rel = sam::pair_relation_from_string(relation);
  if (!rel) throw UsageError("unknown relation '" + relation + "'");
  const auto names = split_list(actors);
  if (names.size() != 2) throw UsageError("--actors expects exactly two names");
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  const sam::ActorSpec& a = doc.env.actor(names[0]);
  const sam::ActorSpec& b = doc.env.actor(names[1]);
  std::optional<sam::ComponentIsomorphism> iso;
  bool holds = false;
  switch (*rel) {
    case sam::PairRelation::identical: holds = sam::identical(a, b); break;
    case sam::PairRelation::dyn_equivalent: holds = sam::dyn_equivalent(a, b, doc.env.actions); break;
    case sam::PairRelation::homological: iso = sam::homological(a, b, doc.env.actions); break;
    case sam::PairRelation::dyn_homological: iso = sam::dyn_homological(a, b, doc.env.actions); break;
  }
  holds = holds || iso.has_value();
  std::cout << relation << "(" << a.name << "," << b.name << ") = " << (holds ? "true" : "false") << "\n";
  if (iso) {
    print_map("rel", iso->rel_map);
    print_map("act", iso->act_map);
    print_map("trn", iso->trn_map);
  }
  return kOk;
}

int cmd_relate(const std::string& spec, const std::string& events, const std::string& relation) {
  const auto ids = split_list(events);
  if (ids.size() < 2 || ids.size() > 3) throw UsageError("--events expects two or three ids");
  if (ids.size() == 3 && relation != "parallel") throw UsageError("three events are supported only for 'parallel'");
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  std::vector<sam::EventRecord> picked;
  for (const auto& id : ids) {
    const auto it = std::find_if(doc.events.begin(), doc.events.end(),
                                 [&](const sam::EventRecord& e) { return e.id == id; });
    if (it == doc.events.end()) throw sam::NameError("unknown event '" + id + "'");
    picked.push_back(*it);
  }
  const sam::SyncGraph sync = doc.env.full_sync();
  const sam::EventRecord& e1 = picked[0];
  const sam::EventRecord& e2 = picked[1];
  bool holds = false;
  try {
    if (relation == "parallel") {
      holds = sam::parallel(picked, sync);
    } else if (relation == "strictly-parallel") {
      holds = sam::strictly_parallel(e1, e2, sync);
    } else if (relation == "sequential") {
      holds = sam::sequential(e1, e2, sync);
    } else if (relation == "strictly-sequential") {
      holds = sam::strictly_sequential(e1, e2, sync);
    } else if (relation == "concurrent") {
      holds = sam::concurrent(e1, e2, sync, sam::CausalGraph(doc.events));
    } else if (relation == "comparable") {
      holds = sam::comparable(e1, e2, sync);
    } else if (relation == "independent") {
      holds = sam::independent(e1, e2, sam::CausalGraph(doc.events));
    } else {
      throw UsageError("unknown relation '" + relation + "'");
    }
  } catch (const sam::IncomparableError& e) {
    std::cout << relation << "(" << events << ") undefined: " << e.what() << "\n";
    return kViolations;
  }
  std::cout << relation << "(" << events << ") = " << (holds ? "true" : "false") << "\n";
  return kOk;
}

std::optional<std::uint64_t> env_seed() {
  const char* text = std::getenv("SAM_SEED");
  if (!text || !*text) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (errno != 0 || *end != '\0' || text[0] == '-') throw UsageError(std::string("invalid SAM_SEED '") + text + "'");
  return v;
}

int cmd_simulate(const std::string& spec, std::optional<std::uint64_t> seed, const std::string& mode,
                 const std::string& out_path) {
  sam::SpecDocument doc = sam::load_spec_file(spec);
  if (seed) {
    doc.sim.seed = *seed;
  } else if (const auto s = env_seed()) {
    doc.sim.seed = *s;
  }
  if (!mode.empty()) {
    const auto m = sam::sim_mode_from_string(mode);
    if (!m) throw UsageError("unknown mode '" + mode + "'");
    doc.sim.mode = *m;
  }
  std::string text;
  for (const auto& trace : sam::run(doc.env, doc.sim, doc.events)) text += sam::write_trace(trace);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
  }
  return kOk;
}

int cmd_trace_check(const std::string& spec, const std::string& trace_path) {
  const sam::SpecDocument doc = sam::load_spec_file(spec);
  const auto traces = sam::load_trace_file(trace_path);
  const sam::SyncGraph sync = doc.env.full_sync();
  bool broken = false;
  for (const auto& t : traces) {
    sam::ViolationList found;
    try {
      found = sam::check_trace(t, doc.env, sync);
    } catch (const sam::ReferenceError& e) {
      found.push_back({"reference", "trace", e.what()});
    }
    std::cout << "branch " << t.branch_id << ": " << t.events.size() << " events, "
              << (found.empty() ? "ok" : std::to_string(found.size()) + " violations") << "\n";
    print_violations(std::cout, found, "  violation: ");
    broken = broken || !found.empty();
  }
  return broken ? kViolations : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"System Actor Model toolkit"};
  app.require_subcommand(1);

  std::string spec, laws, actor, actors, relation, events, mode, out, trace;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "Parse and validate a spec");
  validate->add_option("spec", spec)->required();
  auto* check = app.add_subcommand("check", "Run law checks");
  check->add_option("spec", spec)->required();
  check->add_option("--laws", laws, "Comma-separated law ids, or 'all'");
  auto* classify = app.add_subcommand("classify", "Classify actors");
  classify->add_option("spec", spec)->required();
  classify->add_option("--actor", actor);
  auto* compare = app.add_subcommand("compare", "Compare two actors");
  compare->add_option("spec", spec)->required();
  compare->add_option("--actors", actors)->required();
  compare->add_option("--relation", relation)->required();
  auto* relate = app.add_subcommand("relate", "Temporal relation between events");
  relate->add_option("spec", spec)->required();
  relate->add_option("--events", events)->required();
  relate->add_option("--relation", relation)->required();
  auto* simulate = app.add_subcommand("simulate", "Run the engine");
  simulate->add_option("spec", spec)->required();
  simulate->add_option("--seed", seed);
  simulate->add_option("--mode", mode, "sampled or enumerate-all");
  simulate->add_option("--out", out, "Trace file");
  auto* trace_check = app.add_subcommand("trace-check", "Check a trace file against a spec");
  trace_check->add_option("spec", spec)->required();
  trace_check->add_option("trace", trace)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(spec);
    if (*check) return cmd_check(spec, laws);
    if (*classify) return cmd_classify(spec, actor);
    if (*compare) return cmd_compare(spec, actors, relation);
    if (*relate) return cmd_relate(spec, events, relation);
    if (*simulate) return cmd_simulate(spec, seed, mode, out);
    if (*trace_check) return cmd_trace_check(spec, trace);
  } catch (const sam::ValidationError& e) {
    std::cerr << "invalid environment\n";
    print_violations(std::cerr, e.violations(), "violation: ");
    return kViolations;
  } catch (const sam::RunError& e) {
    std::cerr << "run aborted: " << e.what() << "\n  witness: " << e.witness() << "\n";
    return kViolations;
  } catch (const sam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
