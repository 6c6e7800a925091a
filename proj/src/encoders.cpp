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

#include "semisym/encoders.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "semisym/parse_error.hpp"

namespace semisym {

std::string_view problemName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MaxClique: return "maxclique";
    case ProblemKind::HamiltonCycles: return "hamilton";
    case ProblemKind::GraphColoring: return "coloring";
    case ProblemKind::GraphIsomorphism: return "isomorphism";
  }
  return "unknown";
}

ProblemKind parseProblemKind(std::string_view name) {
  for (auto kind : {ProblemKind::MaxClique, ProblemKind::HamiltonCycles,
                    ProblemKind::GraphColoring, ProblemKind::GraphIsomorphism}) {
    if (problemName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown problem '" + std::string(name) +
                              "' (expected maxclique, hamilton, coloring or isomorphism)");
}

// ---------------------------------------------------------------- VariableMap

namespace {

std::size_t tupleArity(ProblemKind kind) { return kind == ProblemKind::MaxClique ? 1 : 2; }

}  // namespace

std::size_t VariableMap::add(const Tuple& tuple) {
  if (tuple.size() != tupleArity(kind_)) {
    throw std::invalid_argument("tuple arity does not match problem kind");
  }
  const std::size_t idx = inverse_.size();
  if (!forward_.emplace(tuple, idx).second) throw std::invalid_argument("duplicate tuple");
  inverse_.push_back(tuple);
  return idx;
}

std::size_t VariableMap::index(const Tuple& tuple) const {
  auto it = forward_.find(tuple);
  if (it == forward_.end()) throw std::out_of_range("tuple has no variable");
  return it->second;
}

const VariableMap::Tuple& VariableMap::tuple(std::size_t index) const {
  if (index >= inverse_.size()) throw std::out_of_range("variable index out of range");
  return inverse_[index];
}

std::string formatVariableMap(const VariableMap& map) {
  std::ostringstream out;
  out << "map " << problemName(map.kind()) << ' ' << map.size() << '\n';
  for (std::size_t i = 0; i < map.size(); ++i) {
    out << "var " << i;
    for (auto field : map.tuple(i)) out << ' ' << field;
    out << '\n';
  }
  return out.str();
}

VariableMap parseVariableMap(std::string_view text) {
  const auto lines = detail::tokenizeLines(text);
  if (lines.empty()) throw ParseError(0, "missing 'map <problem> <n>' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "map") {
    throw ParseError(header.number, "expected 'map <problem> <n>' header");
  }
  ProblemKind kind;
  try {
    kind = parseProblemKind(header.tokens[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(header.number, e.what());
  }
  const std::size_t n = detail::parseIndex(header.tokens[2], header.number);
  if (lines.size() - 1 != n) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(n) + " variables");
  }
  VariableMap map(kind);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2 + tupleArity(kind) || line.tokens[0] != "var") {
      throw ParseError(line.number, "expected 'var <index> <fields...>'");
    }
    if (detail::parseIndex(line.tokens[1], line.number) != k - 1) {
      throw ParseError(line.number, "variables must be listed in index order");
    }
    VariableMap::Tuple tuple;
    for (std::size_t f = 2; f < line.tokens.size(); ++f) {
      tuple.push_back(detail::parseIndex(line.tokens[f], line.number));
    }
    try {
      map.add(tuple);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return map;
}

// ---------------------------------------------------------------- encoders

Penalty::Penalty(Rational value) : value_(value) {
  if (value_ <= 0) throw std::invalid_argument("penalty A must be positive");
}

std::size_t ProblemInstance::numVariables() const {
  const std::size_t v = graph.numVertices();
  switch (kind) {
    case ProblemKind::MaxClique: return v;
    case ProblemKind::HamiltonCycles: return v * v;
    case ProblemKind::GraphColoring: return v * colors;
    case ProblemKind::GraphIsomorphism: return v * graph2.numVertices();
  }
  return 0;
}

Rational defaultPenalty(ProblemKind kind, std::size_t numVariables) {
  if (kind == ProblemKind::MaxClique) return Rational(3);
  return Rational(static_cast<std::int64_t>(numVariables) + 1);
}

namespace {

/// Reward -1 on every variable and A on each unordered pair for which
/// `conflict` holds. Pairs are visited once (a < b), so several reasons
/// for one pair still give a single A.
Encoding buildPairwise(VariableMap map, const Penalty& penalty,
                       const std::function<bool(const VariableMap::Tuple&,
                                                const VariableMap::Tuple&)>& conflict) {
  QuboMatrix q(map.size());
  for (std::size_t a = 0; a < map.size(); ++a) {
    q.set(a, a, Rational(-1));
    for (std::size_t b = a + 1; b < map.size(); ++b) {
      if (conflict(map.tuple(a), map.tuple(b))) q.set(a, b, penalty.value());
    }
  }
  return {std::move(q), std::move(map)};
}

bool cyclicNeighbors(std::size_t p1, std::size_t p2, std::size_t length) {
  return (p1 + 1) % length == p2 || (p2 + 1) % length == p1;
}

}  // namespace

Encoding encodeMaxClique(const Graph& g, const Penalty& penalty) {
  VariableMap map(ProblemKind::MaxClique);
  for (std::size_t v = 0; v < g.numVertices(); ++v) map.add({v});
  return buildPairwise(std::move(map), penalty, [&](const auto& a, const auto& b) {
    return !g.hasEdge(a[0], b[0]);
  });
}

Encoding encodeHamiltonCycles(const Graph& g, const Penalty& penalty) {
  const std::size_t n = g.numVertices();
  if (n < 3) throw std::invalid_argument("Hamilton cycles need at least 3 vertices");
  VariableMap map(ProblemKind::HamiltonCycles);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < n; ++p) map.add({v, p});
  }
  return buildPairwise(std::move(map), penalty, [&](const auto& a, const auto& b) {
    const std::size_t v1 = a[0], p1 = a[1], v2 = b[0], p2 = b[1];
    if (v1 == v2 || p1 == p2) return true;
    return cyclicNeighbors(p1, p2, n) && !g.hasEdge(v1, v2);
  });
}

Encoding encodeGraphColoring(const Graph& g, std::size_t colors, const Penalty& penalty) {
  if (colors < 1) throw std::invalid_argument("need at least one color");
  VariableMap map(ProblemKind::GraphColoring);
  for (std::size_t v = 0; v < g.numVertices(); ++v) {
    for (std::size_t c = 0; c < colors; ++c) map.add({v, c});
  }
  return buildPairwise(std::move(map), penalty, [&](const auto& a, const auto& b) {
    if (a[0] == b[0]) return true;
    return a[1] == b[1] && g.hasEdge(a[0], b[0]);
  });
}

Encoding encodeGraphIsomorphism(const Graph& g1, const Graph& g2, const Penalty& penalty) {
  if (g1.numVertices() != g2.numVertices()) {
    throw std::invalid_argument("graphs of different order cannot be isomorphic");
  }
  VariableMap map(ProblemKind::GraphIsomorphism);
  for (std::size_t i = 0; i < g1.numVertices(); ++i) {
    for (std::size_t j = 0; j < g2.numVertices(); ++j) map.add({i, j});
  }
  return buildPairwise(std::move(map), penalty, [&](const auto& a, const auto& b) {
    const std::size_t i1 = a[0], j1 = a[1], i2 = b[0], j2 = b[1];
    if (i1 == i2 || j1 == j2) return true;
    return g1.hasEdge(i1, i2) != g2.hasEdge(j1, j2);
  });
}

Encoding encode(const ProblemInstance& instance, std::optional<Rational> penalty) {
  const Penalty a(penalty.value_or(defaultPenalty(instance.kind, instance.numVariables())));
  switch (instance.kind) {
    case ProblemKind::MaxClique: return encodeMaxClique(instance.graph, a);
    case ProblemKind::HamiltonCycles: return encodeHamiltonCycles(instance.graph, a);
    case ProblemKind::GraphColoring:
      return encodeGraphColoring(instance.graph, instance.colors, a);
    case ProblemKind::GraphIsomorphism:
      return encodeGraphIsomorphism(instance.graph, instance.graph2, a);
  }
  throw std::logic_error("unhandled problem kind");
}

// ---------------------------------------------------------------- decoding

std::string DecodedSolution::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ProblemKind::MaxClique: out << "clique:"; break;
    case ProblemKind::HamiltonCycles: out << "cycle:"; break;
    case ProblemKind::GraphColoring: out << "colors:"; break;
    case ProblemKind::GraphIsomorphism: out << "mapping:"; break;
  }
  if (kind == ProblemKind::MaxClique) {
    for (auto v : vertices) out << ' ' << v;
  } else {
    for (const auto& label : labels) {
      if (label) {
        out << ' ' << *label;
      } else {
        out << " -";
      }
    }
  }
  out << "\nvalid: " << (isValid ? "true" : "false");
  return out.str();
}

namespace {

/// Tuples of the set bits, plus labels[slot] = value where `slotField`
/// picks which tuple field is the slot. Slots hit twice stay empty.
struct PairDecode {
  std::vector<std::pair<std::size_t, std::size_t>> active;
  std::vector<std::optional<std::size_t>> labels;
};

PairDecode decodePairs(const VariableMap& map, const Assignment& x, std::size_t slots,
                       std::size_t slotField) {
  PairDecode out;
  out.labels.assign(slots, std::nullopt);
  std::vector<bool> ambiguous(slots, false);
  for (std::size_t idx = 0; idx < map.size(); ++idx) {
    if (!x[idx]) continue;
    const auto& t = map.tuple(idx);
    out.active.push_back({t[0], t[1]});
    const std::size_t slot = t[slotField];
    const std::size_t value = t[1 - slotField];
    if (slot >= slots) continue;
    if (out.labels[slot] || ambiguous[slot]) {
      ambiguous[slot] = true;
      out.labels[slot].reset();
    } else {
      out.labels[slot] = value;
    }
  }
  return out;
}

bool allAssigned(const std::vector<std::optional<std::size_t>>& labels) {
  for (const auto& l : labels) {
    if (!l) return false;
  }
  return true;
}

}  // namespace

DecodedSolution decodeAndValidate(const VariableMap& map, const ProblemInstance& instance,
                                  const Assignment& x) {
  if (x.size() != map.size()) {
    throw std::invalid_argument("assignment does not cover the mapped variables");
  }
  if (map.kind() != instance.kind) throw std::invalid_argument("map and instance disagree");
  DecodedSolution out;
  out.kind = map.kind();
  const Graph& g = instance.graph;
  const std::size_t n = g.numVertices();

  switch (map.kind()) {
    case ProblemKind::MaxClique: {
      for (std::size_t idx = 0; idx < map.size(); ++idx) {
        if (x[idx]) out.vertices.push_back(map.tuple(idx)[0]);
      }
      out.penaltyFree = true;
      for (std::size_t a = 0; a < out.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
          if (!g.hasEdge(out.vertices[a], out.vertices[b])) out.penaltyFree = false;
        }
      }
      out.isValid = out.penaltyFree;
      break;
    }
    case ProblemKind::HamiltonCycles: {
      // tuples are (vertex, position); label positions with vertices
      auto d = decodePairs(map, x, n, 1);
      bool ok = true;
      for (std::size_t a = 0; a < d.active.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < d.active.size() && ok; ++b) {
          const auto [v1, p1] = d.active[a];
          const auto [v2, p2] = d.active[b];
          if (v1 == v2 || p1 == p2) ok = false;
          if (cyclicNeighbors(p1, p2, n) && !g.hasEdge(v1, v2)) ok = false;
        }
      }
      out.labels = std::move(d.labels);
      out.penaltyFree = ok;
      out.isValid = ok && d.active.size() == n && allAssigned(out.labels);
      break;
    }
    case ProblemKind::GraphColoring: {
      auto d = decodePairs(map, x, n, 0);
      bool ok = true;
      for (std::size_t a = 0; a < d.active.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < d.active.size() && ok; ++b) {
          const auto [v1, c1] = d.active[a];
          const auto [v2, c2] = d.active[b];
          if (v1 == v2) ok = false;
          if (c1 == c2 && g.hasEdge(v1, v2)) ok = false;
        }
      }
      out.labels = std::move(d.labels);
      out.penaltyFree = ok;
      out.isValid = ok && allAssigned(out.labels);
      break;
    }
    case ProblemKind::GraphIsomorphism: {
      const Graph& g2 = instance.graph2;
      auto d = decodePairs(map, x, n, 0);
      bool ok = true;
      for (std::size_t a = 0; a < d.active.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < d.active.size() && ok; ++b) {
          const auto [i1, j1] = d.active[a];
          const auto [i2, j2] = d.active[b];
          if (i1 == i2 || j1 == j2) ok = false;
          else if (g.hasEdge(i1, i2) != g2.hasEdge(j1, j2)) ok = false;
        }
      }
      out.labels = std::move(d.labels);
      out.penaltyFree = ok;
      out.isValid = ok && allAssigned(out.labels);
      break;
    }
  }
  return out;
}

}  // namespace semisym
