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

#include "semisym/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace semisym {

namespace {

std::int64_t parseInteger(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational parseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parseInteger(text.substr(0, slash), text);
    const std::int64_t den = parseInteger(text.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view intPart = text.substr(0, dot);
    std::string_view fracPart = text.substr(dot + 1);
    bool negative = false;
    if (!intPart.empty() && (intPart.front() == '-' || intPart.front() == '+')) {
      negative = intPart.front() == '-';
      intPart.remove_prefix(1);
    }
    if ((intPart.empty() && fracPart.empty()) || fracPart.size() > 18) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    for (char c : fracPart) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
      }
    }
    std::int64_t den = 1;
    for (std::size_t k = 0; k < fracPart.size(); ++k) den *= 10;
    const std::int64_t whole = intPart.empty() ? 0 : parseInteger(intPart, text);
    const std::int64_t frac = fracPart.empty() ? 0 : parseInteger(fracPart, text);
    if (whole < 0) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / den) {
      throw std::invalid_argument("number out of range '" + std::string(text) + "'");
    }
    Rational value(whole * den + frac, den);
    return negative ? -value : value;
  }
  return Rational(parseInteger(text, text));
}

std::string formatRational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

double toDouble(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

}  // namespace semisym
