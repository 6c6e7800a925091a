// Copyright 2026 The semisym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, Boost's templated (integer, rational)
// equality calls itself forever. Exact-match overloads win resolution.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}

}  // namespace boost

namespace semisym {

/// Exact value type for every QUBO coefficient and energy.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-7", "1/4", "-2/6" or a plain decimal such as "0.25" or
/// "-1.5" into an exact rational. Throws std::invalid_argument otherwise.
Rational parseRational(std::string_view text);

/// Canonical text form: "3" for integers, "-1/4" otherwise.
std::string formatRational(const Rational& value);

inline Rational absValue(const Rational& value) {
  return value < 0 ? -value : value;
}

double toDouble(const Rational& value);

}  // namespace semisym
