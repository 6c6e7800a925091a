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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semisym/rational.hpp"

namespace semisym {

/// Binary solution vector. Variable 0 is the leftmost character of the
/// string form, and comparison is lexicographic over that string.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : bits_(n, 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static Assignment fromString(std::string_view text);

  /// Inverse of lexIndex(): variable 0 is the most significant bit.
  static Assignment fromLexIndex(std::uint64_t index, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::uint64_t lexIndex() const;
  std::size_t popcount() const;
  std::string toString() const;

  /// First `count` bits.
  Assignment prefix(std::size_t count) const;
  /// This assignment followed by `tail`.
  Assignment concat(const Assignment& tail) const;

  auto operator<=>(const Assignment&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Symmetric QUBO matrix with exact coefficients. Entry (i,i) is the
/// linear term of variable i, entry (i,j) with i != j a coupling. Only
/// nonzero entries are stored; writing 0 removes an entry.
class QuboMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  QuboMatrix() = default;
  explicit QuboMatrix(std::size_t n) : rows_(n) {}

  std::size_t size() const { return rows_.size(); }

  /// Value at (i,j); reading (j,i) returns the same value.
  Rational get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  void add(std::size_t i, std::size_t j, const Rational& value);

  /// Appends one variable with no entries and returns its index.
  std::size_t addVariable();

  /// Nonzero entries of row i (diagonal included), keyed by column.
  const std::map<std::size_t, Rational>& row(std::size_t i) const;

  /// All nonzero entries with i <= j, sorted by (i,j).
  std::vector<std::pair<Key, Rational>> entries() const;

  std::size_t couplingCount() const { return couplings_; }
  std::size_t entryCount() const;
  /// Number of couplings incident to variable i.
  std::size_t couplingDegree(std::size_t i) const;

  bool operator==(const QuboMatrix& other) const { return rows_ == other.rows_; }

 private:
  void checkIndex(std::size_t i) const;

  std::vector<std::map<std::size_t, Rational>> rows_;
  std::size_t couplings_ = 0;
};

/// Structural statistics used as circuit-cost proxies.
struct QuboStats {
  std::size_t numVariables = 0;
  std::size_t numCouplings = 0;
  double density = 0.0;
  std::uint64_t cnotCount = 0;
  std::size_t zzLayerCount = 0;
};

/// Hamiltonian: sum over i <= j of x_i x_j Q_ij.
Rational energy(const QuboMatrix& q, const Assignment& x);

/// Coupling count, CNOT count 2*C*p and a greedy edge-coloring layer count
/// (edges visited in (i,j) order, each gets the lowest color free at both
/// endpoints). The layer count is a depth proxy, not a transpiled depth.
QuboStats stats(const QuboMatrix& q, std::uint64_t layers = 1);

struct SpectrumEntry {
  Assignment assignment;
  Rational energy;
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// All 2^n assignments sorted by energy, ties in lexicographic order.
std::vector<SpectrumEntry> enumerateSpectrum(const QuboMatrix& q,
                                             std::size_t cap = kDefaultEnumerationCap);

/// Integer image of a QUBO: every coefficient multiplied by `scale`, the
/// lcm of the denominators. Used by the enumeration and annealing loops;
/// results are divided by `scale` to recover exact energies.
class IntegerQubo {
 public:
  IntegerQubo() = default;
  /// `scale` must be a multiple of every denominator in q.
  IntegerQubo(const QuboMatrix& q, std::int64_t scale);
  explicit IntegerQubo(const QuboMatrix& q) : IntegerQubo(q, denominatorLcm(q)) {}

  static std::int64_t denominatorLcm(const QuboMatrix& q);

  std::size_t size() const { return linear_.size(); }
  std::int64_t scale() const { return scale_; }
  std::int64_t linear(std::size_t i) const { return linear_[i]; }
  std::span<const std::pair<std::size_t, std::int64_t>> neighbors(std::size_t i) const {
    return adjacency_[i];
  }
  std::int64_t maxAbsEntry() const { return maxAbs_; }
  std::int64_t minPositiveAbsEntry() const { return minAbs_; }

  std::int64_t energy(std::span<const std::uint8_t> bits) const;

  /// Energy change of flipping bit i.
  std::int64_t flipDelta(std::span<const std::uint8_t> bits, std::size_t i) const;

  Rational toRational(std::int64_t scaledEnergy) const {
    return Rational(scaledEnergy, scale_);
  }

 private:
  std::int64_t scale_ = 1;
  std::int64_t maxAbs_ = 0;
  std::int64_t minAbs_ = 0;
  std::vector<std::int64_t> linear_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adjacency_;
};

/// Scaled energies of all 2^n assignments, indexed by Assignment::lexIndex().
/// Walks a Gray code so each step costs one row update.
std::vector<std::int64_t> allEnergies(const IntegerQubo& q);

// .qubo text format: "qubo <n> <m>" then m lines "<i> <j> <value>", i <= j.
QuboMatrix readQubo(std::istream& in);
QuboMatrix parseQubo(std::string_view text);
void writeQubo(std::ostream& out, const QuboMatrix& q);
std::string formatQubo(const QuboMatrix& q);

}  // namespace semisym
