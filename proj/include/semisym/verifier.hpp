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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semisym/qubo.hpp"
#include "semisym/rational.hpp"
#include "semisym/reducer.hpp"

namespace semisym {

inline constexpr std::size_t kDefaultAncillaCap = 20;

struct AncillaCompletion {
  Rational energy;
  Assignment ancillaBits;
};

/// Minimum of energy(qmod, x ++ c) over all 2^a ancilla completions c, and
/// the lexicographically smallest completion reaching it.
AncillaCompletion bestAncillaEnergy(const QuboMatrix& qmod, const ReductionTrace& trace,
                                    const Assignment& x,
                                    std::size_t ancillaCap = kDefaultAncillaCap);

/// Closed-form completion: each ancilla set to (x_i OR x_j) of its pair.
/// Only defined when no two ancillas are coupled; nullopt otherwise.
std::optional<AncillaCompletion> orCompletion(const QuboMatrix& qmod,
                                              const ReductionTrace& trace,
                                              const Assignment& x);

enum class SolutionClass { Valid, Invalid };

/// Invalid iff some factored pair of original variables has both bits set.
/// Pairs that involve an ancilla never make an original-variable
/// assignment invalid: the best completion always clears one side.
SolutionClass classifySolution(const ReductionTrace& trace, const Assignment& x);

/// Drops the ancilla bits of a reduced-space assignment.
Assignment projectAssignment(const ReductionTrace& trace, const Assignment& xmod);

struct EquivalenceReport {
  std::size_t originalN = 0;
  std::size_t reducedN = 0;
  std::uint64_t validCount = 0;
  std::uint64_t invalidCount = 0;
  /// max |best(x) - E(x)| over valid x.
  Rational maxValidEnergyDeviation = 0;
  bool invalidNonDecrease = true;
  bool optimumPreserved = false;
  Rational minEnergyOriginal = 0;
  Rational minEnergyReduced = 0;
  std::uint64_t counterexampleCount = 0;
  /// Lexicographically first failing assignments, at most kMaxCounterexamples.
  std::vector<Assignment> counterexamples;

  static constexpr std::size_t kMaxCounterexamples = 16;

  bool validPreserved() const { return maxValidEnergyDeviation == 0; }
  bool passed() const { return validPreserved() && invalidNonDecrease && optimumPreserved; }
};

/// Partial result over a contiguous range of original assignments. Merging
/// is associative, so ranges can be checked independently.
struct PartialEquivalence {
  std::size_t originalN = 0;
  std::size_t reducedN = 0;
  std::uint64_t validCount = 0;
  std::uint64_t invalidCount = 0;
  Rational maxValidEnergyDeviation = 0;
  bool invalidNonDecrease = true;
  bool empty = true;
  Rational minEnergyOriginal = 0;
  Rational minEnergyReduced = 0;
  /// Largest original energy among x whose best reduced energy equals
  /// minEnergyReduced.
  Rational worstOriginalAtReducedMin = 0;
  std::uint64_t counterexampleCount = 0;
  std::vector<Assignment> counterexamples;
};

PartialEquivalence verifyRange(const QuboMatrix& q, const QuboMatrix& qmod,
                               const ReductionTrace& trace, std::uint64_t begin,
                               std::uint64_t end, std::size_t ancillaCap = kDefaultAncillaCap);
PartialEquivalence mergePartial(const PartialEquivalence& a, const PartialEquivalence& b);
EquivalenceReport finalizeReport(const PartialEquivalence& partial);

/// Exhaustive check over every original assignment x: valid x keep their
/// energy exactly under the best ancilla completion, invalid x never drop,
/// and the projected minimizers of qmod are minimizers of q.
EquivalenceReport verifyEquivalence(const QuboMatrix& q, const QuboMatrix& qmod,
                                    const ReductionTrace& trace,
                                    std::size_t enumerationCap = kDefaultEnumerationCap,
                                    std::size_t ancillaCap = kDefaultAncillaCap);

/// Fixed-order "key: value" lines ending in "status: pass|fail".
std::string renderReport(const EquivalenceReport& report);

/// Energy change of one enhance step, split by the eight (x_i, x_j, x_a)
/// combinations, checked against the closed forms
///   (0,0,0) 0        (0,0,1) z + S    (1,0,0) z - S    (1,0,1) 0
///   (0,1,0) z - S    (0,1,1) 0        (1,1,0) 4z - 2S  (1,1,1) z - S
/// where S = sum over k in syms of Q_ik x_k. Case numbering follows that
/// table row-major (case 1 = (0,0,0) ... case 8 = (1,1,1)).
struct CaseCertificate {
  std::size_t stepIndex = 0;
  std::uint64_t contextsChecked = 0;
  std::array<std::uint64_t, 8> mismatches{};
  /// 4z - 2S > 0 held in every context.
  bool case7Positive = true;

  bool passed() const;
};

/// Certifies one step given the matrices before and after it. Contexts are
/// all assignments of the other variables when there are at most
/// log2(maxContexts) of them, otherwise a seeded sample of maxContexts.
CaseCertificate certifyProofCases(const QuboMatrix& before, const QuboMatrix& after,
                                  const ReductionStep& step, std::uint64_t maxContexts = 4096,
                                  std::uint64_t seed = 0);

/// Replays the trace and certifies every step.
std::vector<CaseCertificate> certifyTrace(const QuboMatrix& original, const ReductionTrace& trace,
                                          std::uint64_t maxContexts = 4096,
                                          std::uint64_t seed = 0);

}  // namespace semisym
