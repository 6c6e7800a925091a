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

#include "semisym/reducer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "semisym/parse_error.hpp"

namespace semisym {

ConflictList getConflictList(const QuboMatrix& q) {
  std::vector<Rational> negativeSum(q.size(), Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (const auto& [k, value] : q.row(i)) {
      if (value < 0) negativeSum[i] += value;
    }
  }
  // A zero entry can never pass since -Z[i] - Z[j] >= 0, so only stored
  // couplings need to be visited.
  ConflictList out;
  for (const auto& [key, value] : q.entries()) {
    const auto [i, j] = key;
    if (i != j && value > -negativeSum[i] - negativeSum[j]) out.push_back({i, j});
  }
  return out;
}

std::vector<std::size_t> sharedCouplings(const QuboMatrix& q, std::size_t i, std::size_t j) {
  std::vector<std::size_t> syms;
  const auto& rowJ = q.row(j);
  for (const auto& [k, value] : q.row(i)) {
    if (k == i || k == j) continue;
    auto it = rowJ.find(k);
    if (it != rowJ.end() && it->second == value) syms.push_back(k);
  }
  return syms;
}

SymmetricPair getMostSymQubits(const QuboMatrix& q, const ConflictList& conflicts) {
  if (conflicts.empty()) throw std::invalid_argument("conflict list is empty");
  SymmetricPair best{{}, conflicts.front()};
  for (const auto& pair : conflicts) {
    auto syms = sharedCouplings(q, pair.i, pair.j);
    if (syms.size() >= best.syms.size()) best = {std::move(syms), pair};
  }
  return best;
}

QuboMatrix enhance(const QuboMatrix& q, VariablePair pair, const std::vector<std::size_t>& syms,
                   const Rational& z) {
  const auto [i, j] = pair;
  if (z <= 0) throw std::invalid_argument("z must be positive");
  if (i >= j || j >= q.size()) throw std::invalid_argument("pair must satisfy i < j < n");
  if (q.get(i, j) == 0) throw std::invalid_argument("pair has no coupling to factor");
  for (auto k : syms) {
    if (k >= q.size()) throw std::invalid_argument("syms index out of range");
    if (k == i || k == j) throw std::invalid_argument("syms must not contain the pair itself");
  }
  if (std::adjacent_find(syms.begin(), syms.end(), std::greater_equal<>()) != syms.end()) {
    throw std::invalid_argument("syms must be strictly ascending");
  }

  QuboMatrix out = q;
  const std::size_t a = out.addVariable();
  out.add(i, i, z);
  out.add(j, j, z);
  out.set(a, a, z);
  out.set(i, a, -2 * z);
  out.set(j, a, -2 * z);
  out.add(i, j, 2 * z);
  for (auto k : syms) {
    out.set(k, a, q.get(i, k));
    out.set(i, k, Rational(0));
    out.set(j, k, Rational(0));
  }
  return out;
}

// ---------------------------------------------------------------- z policy

ZMode ZMode::fixed(const Rational& z) {
  if (z <= 0) throw std::invalid_argument("fixed z must be positive");
  return ZMode(Kind::Fixed, z);
}

ZMode ZMode::parse(std::string_view text) {
  if (text == "safe") return safe();
  if (text == "tight") return tight();
  return fixed(parseRational(text));
}

std::string ZMode::toString() const {
  switch (kind_) {
    case Kind::Safe: return "safe";
    case Kind::Tight: return "tight";
    case Kind::Fixed: return formatRational(value_);
  }
  return "?";
}

Rational safeZ(const QuboMatrix& q) {
  Rational total = 0;
  for (const auto& [key, value] : q.entries()) {
    if (key.first != key.second) total += absValue(value);
  }
  return total;
}

Rational tightZ(const QuboMatrix& q, std::size_t i, const std::vector<std::size_t>& syms) {
  Rational positive = 0;
  Rational negative = 0;
  for (auto k : syms) {
    const Rational v = q.get(i, k);
    if (v > 0) {
      positive += v;
    } else {
      negative -= v;
    }
  }
  return std::max(positive, negative);
}

// ---------------------------------------------------------------- main loop

Reduction factorSemiSymmetries(const QuboMatrix& q, std::size_t numAncillas, const ZMode& zMode) {
  Reduction out{q, {q.size(), {}}};
  if (numAncillas == 0) return out;
  const Rational zSafe = zMode.kind() == ZMode::Kind::Safe ? safeZ(q) : Rational(0);

  ConflictList conflicts = getConflictList(out.qubo);
  while (!conflicts.empty()) {
    auto [syms, pair] = getMostSymQubits(out.qubo, conflicts);
    if (syms.size() < 3 || out.trace.steps.size() == numAncillas) break;
    Rational z;
    switch (zMode.kind()) {
      case ZMode::Kind::Safe: z = zSafe; break;
      case ZMode::Kind::Tight: z = tightZ(out.qubo, pair.i, syms); break;
      case ZMode::Kind::Fixed: z = zMode.value(); break;
    }
    out.qubo = enhance(out.qubo, pair, syms, z);
    out.trace.steps.push_back({out.qubo.size() - 1, pair, z, std::move(syms)});
    conflicts = getConflictList(out.qubo);
  }
  return out;
}

QuboMatrix replayTrace(const QuboMatrix& original, const ReductionTrace& trace) {
  if (original.size() != trace.originalN) {
    throw std::invalid_argument("trace was recorded for a matrix of size " +
                                std::to_string(trace.originalN));
  }
  QuboMatrix q = original;
  for (const auto& step : trace.steps) {
    if (step.ancilla != q.size()) throw std::invalid_argument("trace ancilla indices out of order");
    q = enhance(q, step.pair, step.syms, step.z);
  }
  return q;
}

// ---------------------------------------------------------------- trace file

std::string formatTrace(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "trace " << trace.originalN << '\n';
  for (const auto& step : trace.steps) {
    out << "ancilla " << step.ancilla << " pair " << step.pair.i << ' ' << step.pair.j << " z "
        << formatRational(step.z) << " syms ";
    for (std::size_t k = 0; k < step.syms.size(); ++k) {
      if (k) out << ',';
      out << step.syms[k];
    }
    out << '\n';
  }
  return out.str();
}

ReductionTrace parseTrace(std::string_view text) {
  const auto lines = detail::tokenizeLines(text);
  if (lines.empty()) throw ParseError(0, "missing 'trace <originalN>' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "trace") {
    throw ParseError(header.number, "expected 'trace <originalN>' header");
  }
  ReductionTrace trace;
  trace.originalN = detail::parseIndex(header.tokens[1], header.number);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    if (t.size() != 9 || t[0] != "ancilla" || t[2] != "pair" || t[5] != "z" || t[7] != "syms") {
      throw ParseError(line.number, "expected 'ancilla <a> pair <i> <j> z <value> syms <list>'");
    }
    ReductionStep step;
    step.ancilla = detail::parseIndex(t[1], line.number);
    step.pair = {detail::parseIndex(t[3], line.number), detail::parseIndex(t[4], line.number)};
    try {
      step.z = parseRational(t[6]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    std::string_view list = t[8];
    while (!list.empty()) {
      const auto comma = list.find(',');
      step.syms.push_back(detail::parseIndex(std::string(list.substr(0, comma)), line.number));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
      if (list.empty()) throw ParseError(line.number, "trailing comma in syms list");
    }
    if (step.ancilla != trace.originalN + trace.steps.size()) {
      throw ParseError(line.number, "ancilla indices must be consecutive from originalN");
    }
    if (step.pair.i >= step.pair.j) throw ParseError(line.number, "pair must satisfy i < j");
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace semisym
