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
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "semisym/qubo.hpp"
#include "semisym/rational.hpp"

namespace semisym {

enum class SolveMethod { Exhaustive, SimulatedAnnealing };

std::string_view methodName(SolveMethod method);

struct SolveResult {
  Assignment bestAssignment;
  Rational bestEnergy = 0;
  SolveMethod method = SolveMethod::Exhaustive;
  std::size_t samples = 0;
  /// Fraction of restarts that reached the reference optimum, when one was
  /// supplied.
  std::optional<double> successFraction;

  bool operator==(const SolveResult&) const = default;
};

/// Exact minimum; the lexicographically smallest minimizer is reported.
SolveResult exhaustiveSolve(const QuboMatrix& q, std::size_t cap = kDefaultEnumerationCap);

/// Geometric temperature schedule from `initial` down to `final`. Zero
/// values pick the defaults: initial = max |entry|, final = 0.01 * min
/// nonzero |entry|.
struct AnnealSchedule {
  double initialTemperature = 0.0;
  double finalTemperature = 0.0;
};

struct AnnealOptions {
  std::size_t sweeps = 1000;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  AnnealSchedule schedule;
  /// Energy counted as success, e.g. the exhaustive optimum.
  std::optional<Rational> referenceEnergy;
  /// Maps each restart's best assignment to the energy it is judged by.
  /// Defaults to energy under q. Used to score reduced problems after
  /// projection onto the original variables.
  std::function<Rational(const Assignment&)> successEnergy;
};

/// Single-bit-flip Metropolis annealing. Each restart starts from a uniform
/// random state and runs `sweeps` passes over the variables in index
/// order. Restart r draws from std::mt19937_64 seeded with a SplitMix64
/// mix of (seed, r), so results do not depend on how restarts are
/// scheduled. The overall best is the lowest energy, ties broken by the
/// lexicographically smaller assignment.
SolveResult simulatedAnneal(const QuboMatrix& q, const AnnealOptions& options);

}  // namespace semisym
