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

#include "semisym/qubo.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semisym/parse_error.hpp"

namespace semisym {

// ---------------------------------------------------------------- Assignment

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw std::invalid_argument("assignment bits must be 0 or 1");
  }
}

Assignment Assignment::fromString(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("assignment string may only contain 0 and 1");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Assignment(std::move(bits));
}

Assignment Assignment::fromLexIndex(std::uint64_t index, std::size_t n) {
  if (n > 64) throw std::invalid_argument("lex index supports at most 64 variables");
  Assignment out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.bits_[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
  }
  return out;
}

std::uint64_t Assignment::lexIndex() const {
  if (bits_.size() > 64) throw std::invalid_argument("lex index supports at most 64 variables");
  std::uint64_t index = 0;
  for (auto b : bits_) index = (index << 1) | b;
  return index;
}

std::size_t Assignment::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string Assignment::toString() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Assignment Assignment::prefix(std::size_t count) const {
  if (count > bits_.size()) throw std::invalid_argument("prefix longer than assignment");
  return Assignment(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + count));
}

Assignment Assignment::concat(const Assignment& tail) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
  return Assignment(std::move(bits));
}

// ---------------------------------------------------------------- QuboMatrix

void QuboMatrix::checkIndex(std::size_t i) const {
  if (i >= rows_.size()) {
    throw std::out_of_range("variable index " + std::to_string(i) + " out of range for n=" +
                            std::to_string(rows_.size()));
  }
}

Rational QuboMatrix::get(std::size_t i, std::size_t j) const {
  checkIndex(i);
  checkIndex(j);
  const auto& r = rows_[i];
  auto it = r.find(j);
  return it == r.end() ? Rational(0) : it->second;
}

void QuboMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  checkIndex(i);
  checkIndex(j);
  const bool had = rows_[i].count(j) != 0;
  if (value == 0) {
    rows_[i].erase(j);
    rows_[j].erase(i);
    if (had && i != j) --couplings_;
    return;
  }
  rows_[i][j] = value;
  rows_[j][i] = value;
  if (!had && i != j) ++couplings_;
}

void QuboMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
  set(i, j, get(i, j) + value);
}

std::size_t QuboMatrix::addVariable() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

const std::map<std::size_t, Rational>& QuboMatrix::row(std::size_t i) const {
  checkIndex(i);
  return rows_[i];
}

std::vector<std::pair<QuboMatrix::Key, Rational>> QuboMatrix::entries() const {
  std::vector<std::pair<Key, Rational>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto it = rows_[i].lower_bound(i); it != rows_[i].end(); ++it) {
      out.push_back({{i, it->first}, it->second});
    }
  }
  return out;
}

std::size_t QuboMatrix::entryCount() const {
  std::size_t diagonal = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) diagonal += rows_[i].count(i);
  return diagonal + couplings_;
}

std::size_t QuboMatrix::couplingDegree(std::size_t i) const {
  checkIndex(i);
  return rows_[i].size() - rows_[i].count(i);
}

// ---------------------------------------------------------------- energy & stats

Rational energy(const QuboMatrix& q, const Assignment& x) {
  if (x.size() != q.size()) {
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match matrix dimension " + std::to_string(q.size()));
  }
  Rational total = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!x[i]) continue;
    const auto& r = q.row(i);
    for (auto it = r.lower_bound(i); it != r.end(); ++it) {
      if (x[it->first]) total += it->second;
    }
  }
  return total;
}

QuboStats stats(const QuboMatrix& q, std::uint64_t layers) {
  if (layers < 1) throw std::invalid_argument("layer count p must be at least 1");
  QuboStats s;
  s.numVariables = q.size();
  s.numCouplings = q.couplingCount();
  const double pairs = q.size() < 2 ? 0.0 : 0.5 * static_cast<double>(q.size()) *
                                                static_cast<double>(q.size() - 1);
  s.density = pairs == 0.0 ? 0.0 : static_cast<double>(s.numCouplings) / pairs;
  s.cnotCount = 2 * static_cast<std::uint64_t>(s.numCouplings) * layers;

  std::vector<std::set<std::size_t>> used(q.size());
  std::size_t colors = 0;
  for (const auto& [key, value] : q.entries()) {
    const auto [i, j] = key;
    if (i == j) continue;
    std::size_t color = 0;
    while (used[i].count(color) || used[j].count(color)) ++color;
    used[i].insert(color);
    used[j].insert(color);
    colors = std::max(colors, color + 1);
  }
  s.zzLayerCount = colors;
  return s;
}

// ---------------------------------------------------------------- IntegerQubo

std::int64_t IntegerQubo::denominatorLcm(const QuboMatrix& q) {
  std::int64_t scale = 1;
  for (const auto& [key, value] : q.entries()) {
    scale = std::lcm(scale, value.denominator());
    if (scale > (std::int64_t{1} << 40)) {
      throw std::overflow_error("denominators too large for integer evaluation");
    }
  }
  return scale;
}

IntegerQubo::IntegerQubo(const QuboMatrix& q, std::int64_t scale)
    : scale_(scale), linear_(q.size(), 0), adjacency_(q.size()) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  __int128 budget = 0;
  for (const auto& [key, value] : q.entries()) {
    if (scale % value.denominator() != 0) {
      throw std::invalid_argument("scale is not a multiple of every denominator");
    }
    const __int128 scaled =
        static_cast<__int128>(value.numerator()) * (scale / value.denominator());
    budget += scaled < 0 ? -scaled : scaled;
    if (budget > (static_cast<__int128>(1) << 62)) {
      throw std::overflow_error("matrix too large for integer evaluation");
    }
    const auto v = static_cast<std::int64_t>(scaled);
    const std::int64_t mag = v < 0 ? -v : v;
    maxAbs_ = std::max(maxAbs_, mag);
    minAbs_ = minAbs_ == 0 ? mag : std::min(minAbs_, mag);
    const auto [i, j] = key;
    if (i == j) {
      linear_[i] = v;
    } else {
      adjacency_[i].push_back({j, v});
      adjacency_[j].push_back({i, v});
    }
  }
}

std::int64_t IntegerQubo::energy(std::span<const std::uint8_t> bits) const {
  if (bits.size() != size()) throw std::invalid_argument("assignment length mismatch");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!bits[i]) continue;
    total += linear_[i];
    for (const auto& [j, v] : adjacency_[i]) {
      if (j > i && bits[j]) total += v;
    }
  }
  return total;
}

std::int64_t IntegerQubo::flipDelta(std::span<const std::uint8_t> bits, std::size_t i) const {
  std::int64_t field = linear_[i];
  for (const auto& [j, v] : adjacency_[i]) {
    if (bits[j]) field += v;
  }
  return bits[i] ? -field : field;
}

std::vector<std::int64_t> allEnergies(const IntegerQubo& q) {
  const std::size_t n = q.size();
  if (n > 40) throw std::invalid_argument("too many variables to enumerate");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::int64_t> out(total, 0);
  std::vector<std::uint8_t> bits(n, 0);
  std::int64_t e = 0;
  std::uint64_t lex = 0;
  for (std::uint64_t m = 1; m < total; ++m) {
    const auto p = static_cast<std::size_t>(std::countr_zero(m));
    const std::size_t var = n - 1 - p;
    e += q.flipDelta(bits, var);
    bits[var] ^= 1;
    lex ^= std::uint64_t{1} << p;
    out[lex] = e;
  }
  return out;
}

std::vector<SpectrumEntry> enumerateSpectrum(const QuboMatrix& q, std::size_t cap) {
  if (q.size() > cap) {
    throw std::invalid_argument("refusing to enumerate 2^" + std::to_string(q.size()) +
                                " assignments (cap is " + std::to_string(cap) + ")");
  }
  const IntegerQubo iq(q);
  const auto energies = allEnergies(iq);
  std::vector<std::uint64_t> order(energies.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return energies[a] < energies[b]; });
  std::vector<SpectrumEntry> out;
  out.reserve(order.size());
  for (auto index : order) {
    out.push_back({Assignment::fromLexIndex(index, q.size()), iq.toRational(energies[index])});
  }
  return out;
}

// ---------------------------------------------------------------- file format

QuboMatrix parseQubo(std::string_view text) {
  const auto lines = detail::tokenizeLines(text);
  if (lines.empty()) throw ParseError(0, "missing 'qubo <n> <m>' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "qubo") {
    throw ParseError(header.number, "expected 'qubo <n> <m>' header");
  }
  const std::size_t n = detail::parseIndex(header.tokens[1], header.number);
  const std::size_t m = detail::parseIndex(header.tokens[2], header.number);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) +
                                              " entries but file has " +
                                              std::to_string(lines.size() - 1));
  }
  QuboMatrix q(n);
  std::set<QuboMatrix::Key> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 3) throw ParseError(line.number, "expected '<i> <j> <value>'");
    const std::size_t i = detail::parseIndex(line.tokens[0], line.number);
    const std::size_t j = detail::parseIndex(line.tokens[1], line.number);
    if (i >= n || j >= n) throw ParseError(line.number, "index out of range");
    if (i > j) throw ParseError(line.number, "entries must satisfy i <= j");
    if (!seen.insert({i, j}).second) throw ParseError(line.number, "duplicate entry");
    Rational value;
    try {
      value = parseRational(line.tokens[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    q.set(i, j, value);
  }
  return q;
}

QuboMatrix readQubo(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parseQubo(text);
}

void writeQubo(std::ostream& out, const QuboMatrix& q) {
  const auto all = q.entries();
  out << "qubo " << q.size() << ' ' << all.size() << '\n';
  for (const auto& [key, value] : all) {
    out << key.first << ' ' << key.second << ' ' << formatRational(value) << '\n';
  }
}

std::string formatQubo(const QuboMatrix& q) {
  std::ostringstream out;
  writeQubo(out, q);
  return out.str();
}

}  // namespace semisym
