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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "semisym/qubo.hpp"
#include "semisym/rational.hpp"

namespace semisym {

/// Unordered variable pair, always stored with i < j.
struct VariablePair {
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const VariablePair&) const = default;
};

/// Pairs (i,j), i < j, in lexicographic order, that pass the conflict test
///   Q_ij > -Z[i] - Z[j],  Z[i] = sum of the negative entries of row i
/// (diagonal included). Passing the test means setting both variables to 1
/// is strictly worse than clearing either one, whatever the other bits are.
using ConflictList = std::vector<VariablePair>;

ConflictList getConflictList(const QuboMatrix& q);

/// Variables k outside {i,j} with Q_ik == Q_jk != 0, ascending.
std::vector<std::size_t> sharedCouplings(const QuboMatrix& q, std::size_t i, std::size_t j);

struct SymmetricPair {
  std::vector<std::size_t> syms;
  VariablePair pair;
};

/// Conflicting pair with the most shared couplings. Scanning keeps the
/// later pair on ties, so the last maximal pair in list order wins.
SymmetricPair getMostSymQubits(const QuboMatrix& q, const ConflictList& conflicts);

/// Adds one ancilla variable `a` (new last index) that takes over the
/// couplings pair.i and pair.j share with `syms`:
///   Q_ii += z, Q_jj += z, Q_aa = z, Q_ia = Q_ja = -2z, Q_ij += 2z,
///   Q_ka = Q_ik and Q_ik = Q_jk = 0 for k in syms.
/// The coupling count changes by exactly 2 - |syms|.
QuboMatrix enhance(const QuboMatrix& q, VariablePair pair, const std::vector<std::size_t>& syms,
                   const Rational& z);

/// How the ancilla weight z is chosen at each factoring step.
class ZMode {
 public:
  enum class Kind { Safe, Tight, Fixed };

  /// z = sum of |Q_ij| over the couplings of the input matrix, computed once.
  static ZMode safe() { return ZMode(Kind::Safe, 0); }
  /// Smallest z that keeps every step energy-preserving for valid
  /// solutions: max(sum of positive, sum of |negative|) of Q_ik over syms.
  /// Equals |sum_k Q_ik| whenever the shared couplings have one sign.
  static ZMode tight() { return ZMode(Kind::Tight, 0); }
  static ZMode fixed(const Rational& z);

  /// "safe", "tight", or a positive rational such as "3" or "9/2".
  static ZMode parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  std::string toString() const;

 private:
  ZMode(Kind kind, Rational value) : kind_(kind), value_(value) {}
  Kind kind_;
  Rational value_;
};

Rational safeZ(const QuboMatrix& q);
Rational tightZ(const QuboMatrix& q, std::size_t i, const std::vector<std::size_t>& syms);

struct ReductionStep {
  std::size_t ancilla = 0;
  VariablePair pair;
  Rational z;
  std::vector<std::size_t> syms;

  bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
  std::size_t originalN = 0;
  std::vector<ReductionStep> steps;

  std::size_t reducedN() const { return originalN + steps.size(); }
  bool operator==(const ReductionTrace&) const = default;
};

struct Reduction {
  QuboMatrix qubo;
  ReductionTrace trace;
};

inline constexpr std::size_t kUnlimitedAncillas = std::numeric_limits<std::size_t>::max();

/// Repeats conflict detection, pair selection and enhance until the best
/// pair shares fewer than 3 couplings, the ancilla budget is spent, or no
/// conflicting pair is left. Ancillas take part in later rounds.
Reduction factorSemiSymmetries(const QuboMatrix& q, std::size_t numAncillas, const ZMode& zMode);

/// Re-applies every recorded enhance step to `original`.
QuboMatrix replayTrace(const QuboMatrix& original, const ReductionTrace& trace);

// "trace <originalN>" then one
// "ancilla <a> pair <i> <j> z <value> syms <k1,k2,...>" line per step.
std::string formatTrace(const ReductionTrace& trace);
ReductionTrace parseTrace(std::string_view text);

}  // namespace semisym
