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

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sam {

/// A located failure of some rule. `rule` names the law or invariant
/// ("CA", "react.range", "timing.reserved"), `path` points at the offending
/// element, `detail` is free text for humans.
struct Violation {
  std::string rule;
  std::string path;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ViolationList = std::vector<Violation>;

inline std::ostream& operator<<(std::ostream& os, const Violation& v) {
  os << v.rule << " at " << v.path;
  if (!v.detail.empty()) os << ": " << v.detail;
  return os;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference to an actor, clock, event or law id that does not exist.
class NameError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// An action was asked about relative to an actor that does not own it.
class OwnershipError : public Error {
 public:
  using Error::Error;
};

/// Two time sets live on clocks with no synchronization path between them.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

/// An event references a trigger or dependency that is not in the trace.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

/// The operation requires a law or setting that is not configured.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Undefined algebraic operation, e.g. negating total inaction.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)),
        message_(message) {}

  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// The environment failed validation; carries every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(ViolationList violations);

  const ViolationList& violations() const { return violations_; }

 private:
  ViolationList violations_;
};

/// Simulation aborted; `witness` describes the offending step.
class RunError : public Error {
 public:
  RunError(const std::string& message, Violation witness)
      : Error(message), witness_(std::move(witness)) {}

  const Violation& witness() const { return witness_; }

 private:
  Violation witness_;
};

}  // namespace sam
