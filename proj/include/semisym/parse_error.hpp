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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semisym {

/// Malformed input file. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

/// One logical input line with comments stripped and tokens split.
struct TokenLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// Splits text into whitespace-separated tokens per line, dropping
/// everything after '#' and lines that end up empty.
std::vector<TokenLine> tokenizeLines(std::string_view text);

std::size_t parseIndex(const std::string& token, std::size_t line);

}  // namespace detail

}  // namespace semisym
