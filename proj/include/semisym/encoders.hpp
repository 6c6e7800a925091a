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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semisym/graph.hpp"
#include "semisym/qubo.hpp"
#include "semisym/rational.hpp"

namespace semisym {

enum class ProblemKind { MaxClique, HamiltonCycles, GraphColoring, GraphIsomorphism };

/// "maxclique", "hamilton", "coloring", "isomorphism".
std::string_view problemName(ProblemKind kind);
ProblemKind parseProblemKind(std::string_view name);

/// Bijection between semantic tuples and QUBO variable indices.
///   MaxClique:        (vertex)
///   HamiltonCycles:   (vertex, position)
///   GraphColoring:    (vertex, color)
///   GraphIsomorphism: (vertex of G1, vertex of G2)
class VariableMap {
 public:
  using Tuple = std::vector<std::size_t>;

  explicit VariableMap(ProblemKind kind) : kind_(kind) {}

  ProblemKind kind() const { return kind_; }
  std::size_t size() const { return inverse_.size(); }

  /// Registers the next variable index for `tuple`.
  std::size_t add(const Tuple& tuple);
  std::size_t index(const Tuple& tuple) const;
  const Tuple& tuple(std::size_t index) const;

  bool operator==(const VariableMap& other) const = default;

 private:
  ProblemKind kind_;
  std::map<Tuple, std::size_t> forward_;
  std::vector<Tuple> inverse_;
};

// "map <problem> <n>" header, then "var <index> <fields...>" per variable.
std::string formatVariableMap(const VariableMap& map);
VariableMap parseVariableMap(std::string_view text);

/// Constraint weight A; always strictly positive.
class Penalty {
 public:
  explicit Penalty(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

struct Encoding {
  QuboMatrix qubo;
  VariableMap map;
};

/// Graph inputs of one problem instance.
struct ProblemInstance {
  ProblemKind kind = ProblemKind::MaxClique;
  Graph graph;
  Graph graph2;            // isomorphism only
  std::size_t colors = 0;  // coloring only

  std::size_t numVariables() const;
};

/// 3 for MaxClique, numVariables + 1 for the others.
Rational defaultPenalty(ProblemKind kind, std::size_t numVariables);

Encoding encodeMaxClique(const Graph& g, const Penalty& penalty = Penalty(3));
Encoding encodeHamiltonCycles(const Graph& g, const Penalty& penalty);
Encoding encodeGraphColoring(const Graph& g, std::size_t colors, const Penalty& penalty);
Encoding encodeGraphIsomorphism(const Graph& g1, const Graph& g2, const Penalty& penalty);

/// Dispatches on instance.kind; uses defaultPenalty when none is given.
Encoding encode(const ProblemInstance& instance, std::optional<Rational> penalty = std::nullopt);

struct DecodedSolution {
  ProblemKind kind = ProblemKind::MaxClique;
  /// MaxClique: selected vertices in ascending order.
  std::vector<std::size_t> vertices;
  /// Hamilton: vertex at each position. Coloring: color of each vertex.
  /// Isomorphism: G2 image of each G1 vertex. Empty slot = unassigned or
  /// ambiguous.
  std::vector<std::optional<std::size_t>> labels;
  /// No pairwise constraint is violated (no penalty term is active).
  bool penaltyFree = false;
  /// Complete, correct solution of the problem.
  bool isValid = false;

  std::string describe() const;
};

/// Classical decoding and validation. Never throws for bad solutions; those
/// come back with isValid = false.
DecodedSolution decodeAndValidate(const VariableMap& map, const ProblemInstance& instance,
                                  const Assignment& x);

}  // namespace semisym
