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

#include "semisym/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "semisym/solver.hpp"
#include "semisym/verifier.hpp"

namespace semisym {

std::string formatBudget(std::size_t budget) {
  return budget == kUnlimitedAncillas ? "max" : std::to_string(budget);
}

ProblemInstance makeInstance(ProblemKind problem, std::size_t vertices, std::uint64_t seed,
                             double edgeProbability, std::size_t colors) {
  ProblemInstance instance;
  instance.kind = problem;
  instance.graph = erdosRenyi(vertices, edgeProbability, seed);
  if (problem == ProblemKind::GraphColoring) instance.colors = colors;
  if (problem == ProblemKind::GraphIsomorphism) {
    instance.graph2 =
        permuteGraph(instance.graph, randomPermutation(vertices, seed ^ 0x9e3779b97f4a7c15ULL));
  }
  return instance;
}

namespace {

void writeFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

std::vector<BenchRow> runBenchmark(const BenchConfig& config) {
  if (config.minVertices > config.maxVertices) throw std::invalid_argument("empty size range");
  std::vector<BenchRow> rows;
  for (std::size_t v = config.minVertices; v <= config.maxVertices; ++v) {
    for (std::size_t s = 0; s < config.seedsPerSize; ++s) {
      const std::uint64_t seed = config.baseSeed + s;
      const ProblemInstance instance =
          makeInstance(config.problem, v, seed, config.edgeProbability, config.colors);
      const Encoding enc = encode(instance, config.penalty);
      const Rational penalty =
          config.penalty.value_or(defaultPenalty(config.problem, instance.numVariables()));
      const QuboStats before = stats(enc.qubo);
      const bool small = enc.qubo.size() <= config.verifyCap;

      std::optional<Rational> optimum;
      if (small) optimum = exhaustiveSolve(enc.qubo, config.verifyCap).bestEnergy;

      const std::string stem = std::string(problemName(config.problem)) + "_v" +
                               std::to_string(v) + "_s" + std::to_string(seed);
      if (config.emitDirectory) {
        std::filesystem::path dir(*config.emitDirectory);
        std::filesystem::create_directories(dir);
        writeFile(dir / (stem + ".qubo"), formatQubo(enc.qubo));
        writeFile(dir / (stem + ".map"), formatVariableMap(enc.map));
      }

      for (std::size_t budget : config.budgets) {
        const Reduction red = factorSemiSymmetries(enc.qubo, budget, config.zMode);
        const QuboStats after = stats(red.qubo);
        BenchRow row;
        row.problem = std::string(problemName(config.problem));
        row.vertices = v;
        row.seed = seed;
        row.budget = budget;
        row.penalty = penalty;
        row.numAncillasUsed = red.trace.steps.size();
        row.couplingsBefore = before.numCouplings;
        row.couplingsAfter = after.numCouplings;
        row.qubitsBefore = before.numVariables;
        row.qubitsAfter = after.numVariables;
        row.cnotBefore = before.cnotCount;
        row.cnotAfter = after.cnotCount;
        row.zzLayersBefore = before.zzLayerCount;
        row.zzLayersAfter = after.zzLayerCount;
        for (const auto& step : red.trace.steps) row.factoredCouplings += step.syms.size() - 2;
        row.reductionPercent =
            row.couplingsBefore == 0
                ? 0.0
                : 100.0 *
                      (static_cast<double>(row.couplingsBefore) -
                       static_cast<double>(row.couplingsAfter)) /
                      static_cast<double>(row.couplingsBefore);

        if (small && red.trace.steps.size() <= kDefaultAncillaCap) {
          const auto report = verifyEquivalence(enc.qubo, red.qubo, red.trace, config.verifyCap);
          row.verifyStatus = report.validPreserved() && report.optimumPreserved ? "checked"
                                                                                 : "failed";
          AnnealOptions opts;
          opts.sweeps = config.annealSweeps;
          opts.restarts = config.annealRestarts;
          opts.seed = seed;
          opts.referenceEnergy = optimum;
          row.successBefore = simulatedAnneal(enc.qubo, opts).successFraction;
          const QuboMatrix& original = enc.qubo;
          const ReductionTrace& trace = red.trace;
          opts.successEnergy = [&](const Assignment& xmod) {
            return energy(original, projectAssignment(trace, xmod));
          };
          row.successAfter = simulatedAnneal(red.qubo, opts).successFraction;
        } else {
          row.verifyStatus = "skipped";
        }

        if (config.emitDirectory) {
          std::filesystem::path dir(*config.emitDirectory);
          const std::string reduced = stem + "_b" + formatBudget(budget);
          writeFile(dir / (reduced + ".qubo"), formatQubo(red.qubo));
          writeFile(dir / (reduced + ".trace"), formatTrace(red.trace));
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.problem, a.vertices, a.seed, a.budget) <
           std::tie(b.problem, b.vertices, b.seed, b.budget);
  });
  return rows;
}

std::string formatBenchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "# physical qubits after embedding, chain length and chain break fraction are "
         "hardware-only metrics and are not reported\n";
  out << "problem,vertices,seed,budget,A,numAncillasUsed,couplingsBefore,couplingsAfter,"
         "qubitCountBefore,qubitCountAfter,cnotBefore,cnotAfter,zzLayersBefore,zzLayersAfter,"
         "reductionPercent,successBefore,successAfter,verifyStatus\n";
  auto fraction = [](const std::optional<double>& v) {
    if (!v) return std::string("NA");
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << *v;
    return s.str();
  };
  for (const auto& r : rows) {
    std::ostringstream pct;
    pct << std::fixed << std::setprecision(4) << r.reductionPercent;
    out << r.problem << ',' << r.vertices << ',' << r.seed << ',' << formatBudget(r.budget) << ','
        << formatRational(r.penalty) << ',' << r.numAncillasUsed << ',' << r.couplingsBefore
        << ',' << r.couplingsAfter << ',' << r.qubitsBefore << ',' << r.qubitsAfter << ','
        << r.cnotBefore << ',' << r.cnotAfter << ',' << r.zzLayersBefore << ','
        << r.zzLayersAfter << ',' << pct.str() << ',' << fraction(r.successBefore) << ','
        << fraction(r.successAfter) << ',' << r.verifyStatus << '\n';
  }
  return out.str();
}

}  // namespace semisym
