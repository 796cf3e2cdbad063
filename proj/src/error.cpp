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

#include "sam/error.hpp"

#include <sstream>

namespace sam {

namespace {

std::string summarize(const ViolationList& violations) {
  std::ostringstream os;
  os << violations.size() << " validation violation(s)";
  if (!violations.empty()) os << "; first: " << violations.front();
  return os.str();
}

}  // namespace

ValidationError::ValidationError(ViolationList violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

}  // namespace sam
