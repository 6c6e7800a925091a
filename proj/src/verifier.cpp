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

#include "semisym/verifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace semisym {

namespace {

std::int64_t commonScale(const QuboMatrix& a, const QuboMatrix& b) {
  return std::lcm(IntegerQubo::denominatorLcm(a), IntegerQubo::denominatorLcm(b));
}

void checkTrace(const QuboMatrix& qmod, const ReductionTrace& trace) {
  if (qmod.size() != trace.reducedN()) {
    throw std::invalid_argument("reduced matrix has " + std::to_string(qmod.size()) +
                                " variables but the trace implies " +
                                std::to_string(trace.reducedN()));
  }
}

/// Minimizes the ancilla part of a reduced matrix for fixed original bits.
class AncillaSolver {
 public:
  AncillaSolver(const IntegerQubo& mod, std::size_t originalN, std::size_t cap)
      : mod_(mod), n_(originalN), a_(mod.size() - originalN), ancAdj_(a_), h_(a_), c_(a_) {
    if (a_ > cap) {
      throw std::invalid_argument(std::to_string(a_) + " ancillas exceed the cap of " +
                                  std::to_string(cap));
    }
    for (std::size_t t = 0; t < a_; ++t) {
      for (const auto& [k, v] : mod_.neighbors(n_ + t)) {
        if (k >= n_) {
          ancAdj_[t].push_back({k - n_, v});
          coupled_ = true;
        }
      }
    }
  }

  bool ancillasCoupled() const { return coupled_; }

  /// Scaled energy of x ++ 0 restricted to original variables.
  std::int64_t baseEnergy(std::span<const std::uint8_t> x) const {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      e += mod_.linear(i);
      for (const auto& [k, v] : mod_.neighbors(i)) {
        if (k > i && k < n_ && x[k]) e += v;
      }
    }
    return e;
  }

  /// Linear field of each ancilla given the original bits.
  void fields(std::span<const std::uint8_t> x) {
    for (std::size_t t = 0; t < a_; ++t) {
      std::int64_t h = mod_.linear(n_ + t);
      for (const auto& [k, v] : mod_.neighbors(n_ + t)) {
        if (k < n_ && x[k]) h += v;
      }
      h_[t] = h;
    }
  }

  /// Returns (scaled energy, lex index of the best completion).
  std::pair<std::int64_t, std::uint64_t> solve(std::span<const std::uint8_t> x) {
    fields(x);
    const std::int64_t base = baseEnergy(x);
    if (!coupled_) {
      // Independent ancillas: the product-space minimum separates exactly.
      std::int64_t e = base;
      std::uint64_t lex = 0;
      for (std::size_t t = 0; t < a_; ++t) {
        if (h_[t] < 0) {
          e += h_[t];
          lex |= std::uint64_t{1} << (a_ - 1 - t);
        }
      }
      return {e, lex};
    }
    std::fill(c_.begin(), c_.end(), 0);
    std::int64_t cur = 0, best = 0;
    std::uint64_t lex = 0, bestLex = 0;
    const std::uint64_t total = std::uint64_t{1} << a_;
    for (std::uint64_t m = 1; m < total; ++m) {
      const auto p = static_cast<std::size_t>(std::countr_zero(m));
      const std::size_t t = a_ - 1 - p;
      std::int64_t field = h_[t];
      for (const auto& [u, v] : ancAdj_[t]) {
        if (c_[u]) field += v;
      }
      cur += c_[t] ? -field : field;
      c_[t] ^= 1;
      lex ^= std::uint64_t{1} << p;
      if (cur < best || (cur == best && lex < bestLex)) {
        best = cur;
        bestLex = lex;
      }
    }
    return {base + best, bestLex};
  }

 private:
  const IntegerQubo& mod_;
  std::size_t n_;
  std::size_t a_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> ancAdj_;
  bool coupled_ = false;
  std::vector<std::int64_t> h_;
  std::vector<std::uint8_t> c_;
};

std::vector<VariablePair> originalPairs(const ReductionTrace& trace) {
  std::vector<VariablePair> out;
  for (const auto& step : trace.steps) {
    if (step.pair.j < trace.originalN) out.push_back(step.pair);
  }
  return out;
}

bool violates(const std::vector<VariablePair>& pairs, std::span<const std::uint8_t> x) {
  for (const auto& p : pairs) {
    if (x[p.i] && x[p.j]) return true;
  }
  return false;
}

}  // namespace

AncillaCompletion bestAncillaEnergy(const QuboMatrix& qmod, const ReductionTrace& trace,
                                    const Assignment& x, std::size_t ancillaCap) {
  checkTrace(qmod, trace);
  if (x.size() != trace.originalN) throw std::invalid_argument("assignment length mismatch");
  const IntegerQubo mod(qmod);
  AncillaSolver solver(mod, trace.originalN, ancillaCap);
  const auto [e, lex] = solver.solve(x.bits());
  return {mod.toRational(e), Assignment::fromLexIndex(lex, trace.steps.size())};
}

std::optional<AncillaCompletion> orCompletion(const QuboMatrix& qmod,
                                              const ReductionTrace& trace,
                                              const Assignment& x) {
  checkTrace(qmod, trace);
  if (x.size() != trace.originalN) throw std::invalid_argument("assignment length mismatch");
  for (std::size_t a = trace.originalN; a < qmod.size(); ++a) {
    for (const auto& [k, v] : qmod.row(a)) {
      if (k != a && k >= trace.originalN) return std::nullopt;
    }
  }
  Assignment ancillas(trace.steps.size());
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& pair = trace.steps[t].pair;
    ancillas.set(t, x[pair.i] || x[pair.j]);
  }
  return AncillaCompletion{energy(qmod, x.concat(ancillas)), ancillas};
}

SolutionClass classifySolution(const ReductionTrace& trace, const Assignment& x) {
  if (x.size() != trace.originalN) throw std::invalid_argument("assignment length mismatch");
  return violates(originalPairs(trace), x.bits()) ? SolutionClass::Invalid : SolutionClass::Valid;
}

Assignment projectAssignment(const ReductionTrace& trace, const Assignment& xmod) {
  if (xmod.size() != trace.reducedN()) {
    throw std::invalid_argument("reduced assignment has length " + std::to_string(xmod.size()) +
                                ", expected " + std::to_string(trace.reducedN()));
  }
  return xmod.prefix(trace.originalN);
}

// ---------------------------------------------------------------- equivalence

PartialEquivalence verifyRange(const QuboMatrix& q, const QuboMatrix& qmod,
                               const ReductionTrace& trace, std::uint64_t begin,
                               std::uint64_t end, std::size_t ancillaCap) {
  if (q.size() != trace.originalN) {
    throw std::invalid_argument("original matrix does not match the trace");
  }
  checkTrace(qmod, trace);
  if (q.size() > 62) throw std::invalid_argument("too many variables to enumerate");
  const std::uint64_t total = std::uint64_t{1} << q.size();
  if (begin > end || end > total) throw std::invalid_argument("bad enumeration range");

  const std::int64_t scale = commonScale(q, qmod);
  const IntegerQubo orig(q, scale);
  const IntegerQubo mod(qmod, scale);
  AncillaSolver solver(mod, q.size(), ancillaCap);
  const auto pairs = originalPairs(trace);

  PartialEquivalence out;
  out.originalN = q.size();
  out.reducedN = qmod.size();
  std::int64_t maxDeviation = 0;
  std::int64_t minOrig = 0, minRed = 0, worstAtMin = 0;
  std::vector<std::uint8_t> x(q.size(), 0);
  for (std::uint64_t lex = begin; lex < end; ++lex) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = static_cast<std::uint8_t>((lex >> (x.size() - 1 - i)) & 1U);
    }
    const std::int64_t e = orig.energy(x);
    const std::int64_t best = solver.solve(x).first;
    bool failed = false;
    if (violates(pairs, x)) {
      ++out.invalidCount;
      if (best < e) {
        out.invalidNonDecrease = false;
        failed = true;
      }
    } else {
      ++out.validCount;
      const std::int64_t dev = best > e ? best - e : e - best;
      maxDeviation = std::max(maxDeviation, dev);
      failed = dev != 0;
    }
    if (failed) {
      ++out.counterexampleCount;
      if (out.counterexamples.size() < EquivalenceReport::kMaxCounterexamples) {
        out.counterexamples.emplace_back(x);
      }
    }
    if (out.empty || e < minOrig) minOrig = e;
    if (out.empty || best < minRed) {
      minRed = best;
      worstAtMin = e;
    } else if (best == minRed) {
      worstAtMin = std::max(worstAtMin, e);
    }
    out.empty = false;
  }
  out.maxValidEnergyDeviation = Rational(maxDeviation, scale);
  out.minEnergyOriginal = Rational(minOrig, scale);
  out.minEnergyReduced = Rational(minRed, scale);
  out.worstOriginalAtReducedMin = Rational(worstAtMin, scale);
  return out;
}

PartialEquivalence mergePartial(const PartialEquivalence& a, const PartialEquivalence& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  if (a.originalN != b.originalN || a.reducedN != b.reducedN) {
    throw std::invalid_argument("cannot merge reports of different instances");
  }
  PartialEquivalence out = a;
  out.validCount += b.validCount;
  out.invalidCount += b.invalidCount;
  out.maxValidEnergyDeviation = std::max(a.maxValidEnergyDeviation, b.maxValidEnergyDeviation);
  out.invalidNonDecrease = a.invalidNonDecrease && b.invalidNonDecrease;
  out.minEnergyOriginal = std::min(a.minEnergyOriginal, b.minEnergyOriginal);
  if (b.minEnergyReduced < a.minEnergyReduced) {
    out.minEnergyReduced = b.minEnergyReduced;
    out.worstOriginalAtReducedMin = b.worstOriginalAtReducedMin;
  } else if (b.minEnergyReduced == a.minEnergyReduced) {
    out.worstOriginalAtReducedMin =
        std::max(a.worstOriginalAtReducedMin, b.worstOriginalAtReducedMin);
  }
  out.counterexampleCount = a.counterexampleCount + b.counterexampleCount;
  out.counterexamples.clear();
  std::merge(a.counterexamples.begin(), a.counterexamples.end(), b.counterexamples.begin(),
             b.counterexamples.end(), std::back_inserter(out.counterexamples));
  if (out.counterexamples.size() > EquivalenceReport::kMaxCounterexamples) {
    out.counterexamples.resize(EquivalenceReport::kMaxCounterexamples);
  }
  return out;
}

EquivalenceReport finalizeReport(const PartialEquivalence& partial) {
  EquivalenceReport r;
  r.originalN = partial.originalN;
  r.reducedN = partial.reducedN;
  r.validCount = partial.validCount;
  r.invalidCount = partial.invalidCount;
  r.maxValidEnergyDeviation = partial.maxValidEnergyDeviation;
  r.invalidNonDecrease = partial.invalidNonDecrease;
  r.minEnergyOriginal = partial.minEnergyOriginal;
  r.minEnergyReduced = partial.minEnergyReduced;
  r.optimumPreserved = !partial.empty &&
                       partial.minEnergyReduced == partial.minEnergyOriginal &&
                       partial.worstOriginalAtReducedMin == partial.minEnergyOriginal;
  r.counterexampleCount = partial.counterexampleCount;
  r.counterexamples = partial.counterexamples;
  return r;
}

EquivalenceReport verifyEquivalence(const QuboMatrix& q, const QuboMatrix& qmod,
                                    const ReductionTrace& trace, std::size_t enumerationCap,
                                    std::size_t ancillaCap) {
  if (q.size() > enumerationCap) {
    throw std::invalid_argument("original matrix has " + std::to_string(q.size()) +
                                " variables, above the enumeration cap of " +
                                std::to_string(enumerationCap));
  }
  return finalizeReport(
      verifyRange(q, qmod, trace, 0, std::uint64_t{1} << q.size(), ancillaCap));
}

std::string renderReport(const EquivalenceReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "originalN: " << r.originalN << '\n'
      << "reducedN: " << r.reducedN << '\n'
      << "validCount: " << r.validCount << '\n'
      << "invalidCount: " << r.invalidCount << '\n'
      << "maxValidEnergyDeviation: " << formatRational(r.maxValidEnergyDeviation) << '\n'
      << "validPreserved: " << flag(r.validPreserved()) << '\n'
      << "invalidNonDecrease: " << flag(r.invalidNonDecrease) << '\n'
      << "optimumPreserved: " << flag(r.optimumPreserved) << '\n'
      << "minEnergyOriginal: " << formatRational(r.minEnergyOriginal) << '\n'
      << "minEnergyReduced: " << formatRational(r.minEnergyReduced) << '\n'
      << "counterexamples: " << r.counterexampleCount << '\n';
  for (const auto& x : r.counterexamples) out << "counterexample: " << x.toString() << '\n';
  out << "status: " << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

// ---------------------------------------------------------------- proof cases

bool CaseCertificate::passed() const {
  return case7Positive &&
         std::all_of(mismatches.begin(), mismatches.end(), [](auto m) { return m == 0; });
}

CaseCertificate certifyProofCases(const QuboMatrix& before, const QuboMatrix& after,
                                  const ReductionStep& step, std::uint64_t maxContexts,
                                  std::uint64_t seed) {
  const std::size_t n = before.size();
  const auto [i, j] = step.pair;
  if (after.size() != n + 1 || step.ancilla != n || j >= n) {
    throw std::invalid_argument("step does not connect the two matrices");
  }
  if (maxContexts == 0) throw std::invalid_argument("need at least one context");
  const std::int64_t scale = std::lcm(commonScale(before, after), step.z.denominator());
  const IntegerQubo qb(before, scale);
  const IntegerQubo qa(after, scale);
  const std::int64_t z = step.z.numerator() * (scale / step.z.denominator());

  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != i && k != j) others.push_back(k);
  }
  const bool exhaustive =
      others.size() < 63 && (std::uint64_t{1} << others.size()) <= maxContexts;
  const std::uint64_t contexts = exhaustive ? (std::uint64_t{1} << others.size()) : maxContexts;

  CaseCertificate cert;
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> yb(n, 0), ya(n + 1, 0);
  for (std::uint64_t c = 0; c < contexts; ++c) {
    const std::uint64_t draw = exhaustive ? c : 0;
    for (std::size_t t = 0; t < others.size(); ++t) {
      const bool bit = exhaustive ? ((draw >> t) & 1U) != 0 : (rng() >> 63) != 0;
      yb[others[t]] = bit;
      ya[others[t]] = bit;
    }
    std::int64_t shared = 0;
    for (auto k : step.syms) {
      if (yb[k]) {
        const Rational v = before.get(i, k);
        shared += v.numerator() * (scale / v.denominator());
      }
    }
    const std::array<std::int64_t, 8> expected = {
        0, z + shared, z - shared, 0, z - shared, 0, 4 * z - 2 * shared, z - shared};
    for (int idx = 0; idx < 8; ++idx) {
      const std::uint8_t xi = (idx >> 2) & 1, xj = (idx >> 1) & 1, xa = idx & 1;
      // (xi, xj, xa) -> case index in the (0,0,0),(0,0,1),(1,0,0),... table
      static constexpr std::array<int, 8> kCaseOf = {0, 1, 4, 5, 2, 3, 6, 7};
      yb[i] = ya[i] = xi;
      yb[j] = ya[j] = xj;
      ya[n] = xa;
      const std::int64_t measured = qa.energy(ya) - qb.energy(yb);
      const int caseIndex = kCaseOf[idx];
      if (measured != expected[caseIndex]) ++cert.mismatches[caseIndex];
    }
    if (4 * z - 2 * shared <= 0) cert.case7Positive = false;
  }
  cert.contextsChecked = contexts;
  return cert;
}

std::vector<CaseCertificate> certifyTrace(const QuboMatrix& original, const ReductionTrace& trace,
                                          std::uint64_t maxContexts, std::uint64_t seed) {
  if (original.size() != trace.originalN) {
    throw std::invalid_argument("original matrix does not match the trace");
  }
  std::vector<CaseCertificate> out;
  QuboMatrix current = original;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& step = trace.steps[s];
    QuboMatrix next = enhance(current, step.pair, step.syms, step.z);
    auto cert = certifyProofCases(current, next, step, maxContexts, seed + s);
    cert.stepIndex = s;
    out.push_back(cert);
    current = std::move(next);
  }
  return out;
}

}  // namespace semisym
