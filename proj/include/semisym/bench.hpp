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
#include <optional>
#include <string>
#include <vector>

#include "semisym/encoders.hpp"
#include "semisym/reducer.hpp"

namespace semisym {

struct BenchConfig {
  ProblemKind problem = ProblemKind::MaxClique;
  std::size_t minVertices = 6;
  std::size_t maxVertices = 12;
  std::size_t seedsPerSize = 3;
  std::uint64_t baseSeed = 1;
  /// kUnlimitedAncillas stands for "factor everything".
  std::vector<std::size_t> budgets = {0, 5, 10};
  ZMode zMode = ZMode::tight();
  double edgeProbability = 0.5;
  std::size_t colors = 3;
  std::optional<Rational> penalty;
  /// Instances with more original variables skip verification and SA scoring.
  std::size_t verifyCap = 16;
  std::size_t annealSweeps = 200;
  std::size_t annealRestarts = 10;
  /// When set, every instance writes <stem>.qubo, <stem>.map and, per
  /// budget, <stem>_b<budget>.qubo / .trace into this directory.
  std::optional<std::string> emitDirectory;
};

struct BenchRow {
  std::string problem;
  std::size_t vertices = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  Rational penalty = 0;
  std::size_t numAncillasUsed = 0;
  std::size_t couplingsBefore = 0;
  std::size_t couplingsAfter = 0;
  std::size_t qubitsBefore = 0;
  std::size_t qubitsAfter = 0;
  std::uint64_t cnotBefore = 0;
  std::uint64_t cnotAfter = 0;
  std::size_t zzLayersBefore = 0;
  std::size_t zzLayersAfter = 0;
  /// 100 * (couplingsBefore - couplingsAfter) / couplingsBefore.
  double reductionPercent = 0.0;
  std::optional<double> successBefore;
  std::optional<double> successAfter;
  /// "checked", "failed" or "skipped".
  std::string verifyStatus;
  /// Sum over steps of (|syms| - 2); equals couplingsBefore - couplingsAfter.
  std::size_t factoredCouplings = 0;
};

/// Seeded instance for the benchmark families. MaxClique, Hamilton and
/// Coloring use erdosRenyi(vertices, pEdge, seed); Isomorphism pairs that
/// graph with a seeded relabelling of itself.
ProblemInstance makeInstance(ProblemKind problem, std::size_t vertices, std::uint64_t seed,
                             double edgeProbability, std::size_t colors);

/// One row per (size, seed, budget), sorted by (problem, |V|, seed, budget).
std::vector<BenchRow> runBenchmark(const BenchConfig& config);

/// CSV with a leading '#' comment, a fixed header row and one line per row.
std::string formatBenchCsv(const std::vector<BenchRow>& rows);

std::string formatBudget(std::size_t budget);

}  // namespace semisym
