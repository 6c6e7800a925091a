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

#include "semisym/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace semisym {

std::string_view methodName(SolveMethod method) {
  return method == SolveMethod::Exhaustive ? "exhaustive" : "sa";
}

SolveResult exhaustiveSolve(const QuboMatrix& q, std::size_t cap) {
  if (q.size() > cap) {
    throw std::invalid_argument("exhaustive search over " + std::to_string(q.size()) +
                                " variables exceeds the cap of " + std::to_string(cap));
  }
  const IntegerQubo iq(q);
  const auto energies = allEnergies(iq);
  // first minimum in lex order is the lexicographically smallest minimizer
  const auto best = std::min_element(energies.begin(), energies.end());
  const auto index = static_cast<std::uint64_t>(best - energies.begin());
  SolveResult out;
  out.bestAssignment = Assignment::fromLexIndex(index, q.size());
  out.bestEnergy = iq.toRational(*best);
  out.method = SolveMethod::Exhaustive;
  out.samples = energies.size();
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct RestartOutcome {
  std::vector<std::uint8_t> bits;
  std::int64_t energy = 0;
};

RestartOutcome annealOnce(const IntegerQubo& q, std::size_t sweeps, double t0, double t1,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = q.size();
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);

  // local field f_i = Q_ii + sum_j Q_ij x_j; flipping i changes the energy
  // by (1 - 2 x_i) f_i
  std::vector<std::int64_t> field(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t f = q.linear(i);
    for (const auto& [j, v] : q.neighbors(i)) {
      if (bits[j]) f += v;
    }
    field[i] = f;
  }
  std::int64_t e = q.energy(bits);
  RestartOutcome best{bits, e};

  const double ratio = sweeps > 1 ? std::pow(t1 / t0, 1.0 / static_cast<double>(sweeps - 1)) : 1.0;
  double temperature = t0;
  for (std::size_t s = 0; s < sweeps; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t delta = bits[i] ? -field[i] : field[i];
      const bool accept =
          delta <= 0 || unitDraw(rng) < std::exp(-static_cast<double>(delta) / temperature);
      if (!accept) continue;
      const std::int64_t sign = bits[i] ? -1 : 1;
      bits[i] ^= 1;
      e += delta;
      for (const auto& [j, v] : q.neighbors(i)) field[j] += sign * v;
      if (e < best.energy) best = {bits, e};
    }
    temperature *= ratio;
  }
  return best;
}

}  // namespace

SolveResult simulatedAnneal(const QuboMatrix& q, const AnnealOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  const IntegerQubo iq(q);
  const double scale = static_cast<double>(iq.scale());
  double t0 = options.schedule.initialTemperature;
  double t1 = options.schedule.finalTemperature;
  // the integer image is scaled, so temperatures are scaled the same way
  if (t0 <= 0.0) t0 = std::max(1.0, static_cast<double>(iq.maxAbsEntry())) / scale;
  if (t1 <= 0.0) t1 = 0.01 * std::max(1.0, static_cast<double>(iq.minPositiveAbsEntry())) / scale;
  if (t1 > t0) throw std::invalid_argument("final temperature above initial temperature");

  SolveResult out;
  out.method = SolveMethod::SimulatedAnnealing;
  out.samples = options.restarts;
  std::size_t successes = 0;
  bool haveBest = false;
  std::int64_t bestEnergy = 0;
  std::vector<std::uint8_t> bestBits;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    const std::uint64_t seed = splitmix64(options.seed ^ splitmix64(r));
    auto outcome = annealOnce(iq, options.sweeps, t0 * scale, t1 * scale, seed);
    if (options.referenceEnergy) {
      const Assignment candidate(outcome.bits);
      const Rational judged = options.successEnergy ? options.successEnergy(candidate)
                                                    : iq.toRational(outcome.energy);
      if (judged == *options.referenceEnergy) ++successes;
    }
    if (!haveBest || outcome.energy < bestEnergy ||
        (outcome.energy == bestEnergy && outcome.bits < bestBits)) {
      bestEnergy = outcome.energy;
      bestBits = std::move(outcome.bits);
      haveBest = true;
    }
  }
  out.bestAssignment = Assignment(bestBits);
  out.bestEnergy = iq.toRational(bestEnergy);
  if (options.referenceEnergy) {
    out.successFraction = static_cast<double>(successes) / static_cast<double>(options.restarts);
  }
  return out;
}

}  // namespace semisym
