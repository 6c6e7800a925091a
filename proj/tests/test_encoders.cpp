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

#include <catch_amalgamated.hpp>

#include <set>

#include "oracle.hpp"
#include "semisym/encoders.hpp"
#include "semisym/parse_error.hpp"
#include "test_util.hpp"

using namespace semisym;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.addEdge(u, v);
  }
  return g;
}

Graph path3() {
  Graph g(3);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  return g;
}

Assignment identityPermutation(std::size_t n) {
  Assignment x(n * n);
  for (std::size_t v = 0; v < n; ++v) x.set(v * n + v, true);
  return x;
}

bool isPermutationMatrix(const std::string& bits, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t rowCount = 0, colCount = 0;
    for (std::size_t c = 0; c < n; ++c) {
      rowCount += bits[r * n + c] == '1';
      colCount += bits[c * n + r] == '1';
    }
    if (rowCount != 1 || colCount != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("MaxClique encoding") {
  SECTION("proof-of-concept graph gives the golden matrix") {
    const auto enc = encodeMaxClique(testing::pocGraph(), Penalty(3));
    CHECK(enc.qubo == testing::pocQubo());
    CHECK(enc.map.size() == 6);
    CHECK(enc.map.tuple(4) == VariableMap::Tuple{4});
  }
  SECTION("complete graph") {
    const auto enc = encodeMaxClique(complete(3));
    CHECK(enc.qubo.couplingCount() == 0);
    const auto best = oracle::bruteMinimum(enc.qubo);
    CHECK(best.energy == -3);
    CHECK(best.minimizers == std::vector<std::string>{"111"});
  }
  SECTION("two isolated vertices") {
    const auto enc = encodeMaxClique(Graph(2));
    CHECK(enc.qubo.get(0, 1) == 3);
    const auto best = oracle::bruteMinimum(enc.qubo);
    CHECK(best.energy == -1);
    CHECK(best.minimizers == std::vector<std::string>{"01", "10"});
  }
  SECTION("ground energy is minus the clique number") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Graph g = erdosRenyi(9, 0.5, seed);
      const auto enc = encodeMaxClique(g);
      CHECK(oracle::bruteMinimum(enc.qubo).energy ==
            -static_cast<std::int64_t>(oracle::maxCliqueSize(g)));
    }
  }
}

TEST_CASE("Hamilton cycle encoding") {
  SECTION("K3 ground states are the six permutation matrices") {
    const auto enc = encodeHamiltonCycles(complete(3), Penalty(10));
    const auto best = oracle::bruteMinimum(enc.qubo);
    CHECK(best.energy == -3);
    REQUIRE(best.minimizers.size() == 6);
    for (const auto& m : best.minimizers) CHECK(isPermutationMatrix(m, 3));
  }
  SECTION("a path has no Hamilton cycle") {
    const auto enc = encodeHamiltonCycles(path3(), Penalty(10));
    CHECK(oracle::bruteMinimum(enc.qubo).energy > -3);
    const auto& map = enc.map;
    for (std::size_t p = 0; p < 3; ++p) {
      CHECK(enc.qubo.get(map.index({0, p}), map.index({2, (p + 1) % 3})) == 10);
    }
  }
  SECTION("same-vertex coupling") {
    const auto enc = encodeHamiltonCycles(complete(4), Penalty(17));
    for (std::size_t v = 0; v < 4; ++v) {
      CHECK(enc.qubo.get(enc.map.index({v, 0}), enc.map.index({v, 1})) == 17);
    }
  }
  SECTION("wrap-around positions are adjacent") {
    Graph g(4);
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    g.addEdge(2, 3);
    const auto enc = encodeHamiltonCycles(g, Penalty(17));
    CHECK(enc.qubo.get(enc.map.index({0, 3}), enc.map.index({3, 0})) == 17);
    CHECK(enc.qubo.get(enc.map.index({0, 0}), enc.map.index({1, 1})) == 0);
    CHECK(enc.qubo.get(enc.map.index({0, 0}), enc.map.index({3, 2})) == 0);
  }
  SECTION("decoding the identity on K3") {
    const ProblemInstance inst{ProblemKind::HamiltonCycles, complete(3), {}, 0};
    const auto enc = encode(inst);
    const auto d = decodeAndValidate(enc.map, inst, identityPermutation(3));
    CHECK(d.isValid);
    REQUIRE(d.labels.size() == 3);
    CHECK(d.labels[0] == 0u);
    CHECK(d.labels[1] == 1u);
    CHECK(d.labels[2] == 2u);
    CHECK(d.describe() == "cycle: 0 1 2\nvalid: true");
  }
  SECTION("fewer than three vertices is rejected") {
    CHECK_THROWS(encodeHamiltonCycles(Graph(2), Penalty(5)));
  }
}

TEST_CASE("graph coloring encoding") {
  SECTION("single edge with two colors") {
    Graph g(2);
    g.addEdge(0, 1);
    const auto enc = encodeGraphColoring(g, 2, Penalty(5));
    const auto best = oracle::bruteMinimum(enc.qubo);
    CHECK(best.energy == -2);
    // vertex-major layout: (0,0),(0,1),(1,0),(1,1)
    CHECK(best.minimizers == std::vector<std::string>{"0110", "1001"});
  }
  SECTION("a triangle is not 2-colorable") {
    const auto enc = encodeGraphColoring(complete(3), 2, Penalty(7));
    CHECK(oracle::bruteMinimum(enc.qubo).energy > -3);
  }
  SECTION("one-color coupling and multi-color decode") {
    const ProblemInstance inst{ProblemKind::GraphColoring, path3(), {}, 2};
    const auto enc = encode(inst);
    CHECK(enc.qubo.get(enc.map.index({1, 0}), enc.map.index({1, 1})) == 7);
    const auto d = decodeAndValidate(enc.map, inst, Assignment::fromString("110110"));
    CHECK_FALSE(d.isValid);
    CHECK_FALSE(d.penaltyFree);
    CHECK_FALSE(d.labels[0].has_value());
  }
  SECTION("zero colors is rejected") { CHECK_THROWS(encodeGraphColoring(path3(), 0, Penalty(1))); }
}

TEST_CASE("graph isomorphism encoding") {
  SECTION("K3 onto itself") {
    const auto enc = encodeGraphIsomorphism(complete(3), complete(3), Penalty(10));
    const auto best = oracle::bruteMinimum(enc.qubo);
    CHECK(best.energy == -3);
    REQUIRE(best.minimizers.size() == 6);
    for (const auto& m : best.minimizers) CHECK(isPermutationMatrix(m, 3));
  }
  SECTION("permuted path") {
    const Graph g1 = path3();
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto perm = randomPermutation(3, seed);
      const Graph g2 = permuteGraph(g1, perm);
      const ProblemInstance inst{ProblemKind::GraphIsomorphism, g1, g2, 0};
      const auto enc = encode(inst);
      const auto best = oracle::bruteMinimum(enc.qubo);
      CHECK(best.energy == -3);
      Assignment image(9);
      for (std::size_t i = 0; i < 3; ++i) image.set(i * 3 + perm[i], true);
      CHECK(std::find(best.minimizers.begin(), best.minimizers.end(), image.toString()) !=
            best.minimizers.end());
      CHECK(decodeAndValidate(enc.map, inst, image).isValid);
    }
  }
  SECTION("K3 against the empty graph") {
    const auto enc = encodeGraphIsomorphism(complete(3), Graph(3), Penalty(10));
    CHECK(oracle::bruteMinimum(enc.qubo).energy > -3);
  }
  SECTION("order mismatch is rejected") {
    CHECK_THROWS(encodeGraphIsomorphism(complete(3), Graph(4), Penalty(10)));
  }
}

TEST_CASE("MaxClique decode on the proof-of-concept instance") {
  const ProblemInstance inst{ProblemKind::MaxClique, testing::pocGraph(), {}, 0};
  const auto enc = encode(inst);
  const auto d = decodeAndValidate(enc.map, inst, Assignment::fromString("101001"));
  CHECK(d.isValid);
  CHECK(d.vertices == std::vector<std::size_t>{0, 2, 5});
  CHECK(d.describe() == "clique: 0 2 5\nvalid: true");
  CHECK_FALSE(decodeAndValidate(enc.map, inst, Assignment::fromString("110000")).isValid);
  CHECK_THROWS(decodeAndValidate(enc.map, inst, Assignment::fromString("10100")));
}

TEST_CASE("defaults and penalties") {
  CHECK(defaultPenalty(ProblemKind::MaxClique, 40) == 3);
  CHECK(defaultPenalty(ProblemKind::HamiltonCycles, 16) == 17);
  CHECK_THROWS(Penalty(0));
  CHECK_THROWS(Penalty(-1));
  CHECK(problemName(parseProblemKind("isomorphism")) == "isomorphism");
  CHECK_THROWS(parseProblemKind("tsp"));
}

TEST_CASE("variable map file round trip") {
  const auto enc = encodeGraphColoring(path3(), 3, Penalty(10));
  const std::string text = formatVariableMap(enc.map);
  CHECK(text.rfind("map coloring 9\nvar 0 0 0\nvar 1 0 1\n", 0) == 0);
  CHECK(parseVariableMap(text) == enc.map);
  CHECK_THROWS_AS(parseVariableMap("map coloring 2\nvar 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parseVariableMap("map coloring 1\nvar 0 0\n"), ParseError);
  CHECK_THROWS_AS(parseVariableMap("map tsp 1\nvar 0 0 0\n"), ParseError);
}

namespace {

/// Exhaustive check of the penalty-structure invariants on one instance.
void checkInstance(const ProblemInstance& inst, bool feasible) {
  const auto enc = encode(inst);
  const Rational a = defaultPenalty(inst.kind, inst.numVariables());
  const oracle::DenseSymmetric dense(enc.qubo);
  const std::size_t n = enc.qubo.size();
  Rational minimum = 0;
  bool minimizerValid = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto bits = oracle::bitsOf(m, n);
    const Assignment x = Assignment::fromString(oracle::bitString(bits));
    const Rational e = dense.energy(bits);
    const auto d = decodeAndValidate(enc.map, inst, x);
    const auto setBits = static_cast<std::int64_t>(x.popcount());
    if (d.penaltyFree) {
      CHECK(e == -setBits);
    } else {
      CHECK(e >= Rational(-setBits) + a);
    }
    if (d.isValid) CHECK(d.penaltyFree);
    if (m == 0 || e < minimum) {
      minimum = e;
      minimizerValid = d.isValid;
    } else if (e == minimum) {
      minimizerValid = minimizerValid && d.isValid;
    }
  }
  // every global minimizer is a valid solution exactly when one exists
  if (inst.kind != ProblemKind::MaxClique) CHECK(minimizerValid == feasible);
}

}  // namespace

TEST_CASE("property: penalty structure and ground states against semantic oracles") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = erdosRenyi(8, 0.5, seed);
    checkInstance({ProblemKind::MaxClique, g, {}, 0}, true);
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = erdosRenyi(4, 0.7, seed);
    checkInstance({ProblemKind::HamiltonCycles, g, {}, 0}, oracle::hasHamiltonCycle(g));
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = erdosRenyi(5, 0.6, seed);
    checkInstance({ProblemKind::GraphColoring, g, {}, 3}, oracle::isColorable(g, 3));
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g1 = erdosRenyi(4, 0.5, seed);
    const Graph g2 = seed % 2 == 0 ? permuteGraph(g1, randomPermutation(4, seed))
                                   : erdosRenyi(4, 0.5, seed + 100);
    checkInstance({ProblemKind::GraphIsomorphism, g1, g2, 0}, oracle::areIsomorphic(g1, g2));
  }
}
