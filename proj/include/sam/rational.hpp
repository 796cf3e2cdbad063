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

#include <boost/multiprecision/cpp_int.hpp>

namespace sam {

/// Exact, unbounded rational. All time arithmetic goes through this type so
/// that coincidence of moments is decided by equality, never by tolerance.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text: reduced "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace sam
