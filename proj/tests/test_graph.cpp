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

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "semisym/graph.hpp"
#include "semisym/parse_error.hpp"
#include "test_util.hpp"

using namespace semisym;

TEST_CASE("edge list parsing") {
  const Graph g = testing::pocGraph();
  CHECK(g.numVertices() == 6);
  CHECK(g.numEdges() == 6);
  CHECK(g.hasEdge(2, 0));
  CHECK(g.hasEdge(4, 3));
  CHECK_FALSE(g.hasEdge(1, 4));
  CHECK(g.degree(3) == 3);

  CHECK(formatEdgeList(g) == "graph 6\n0 2\n0 3\n0 5\n1 3\n2 5\n3 4\n");
  CHECK(parseEdgeList(formatEdgeList(g)) == g);

  // duplicates and reversed pairs collapse
  const Graph d = parseEdgeList("graph 3\n0 1\n1 0\n");
  CHECK(d.numEdges() == 1);

  auto lineOf = [](const std::string& text) {
    try {
      parseEdgeList(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(lineOf("graph 3\n0 0\n") == 2);
  CHECK(lineOf("graph 3\n# note\n0 3\n") == 3);
  CHECK(lineOf("graph 3\n0 1 2\n") == 2);
  CHECK(lineOf("edges 3\n") == 1);
  CHECK(lineOf("graph 3\n0 -1\n") == 2);
  CHECK(lineOf("") == 0);
}

TEST_CASE("graph edits reject bad edges") {
  Graph g(3);
  CHECK_THROWS_AS(g.addEdge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.addEdge(0, 3), std::out_of_range);
  g.addEdge(2, 0);
  CHECK(g.edges().begin()->first == 0);
}

TEST_CASE("Erdos-Renyi generation") {
  SECTION("extreme probabilities") {
    CHECK(erdosRenyi(7, 0.0, 1).numEdges() == 0);
    CHECK(erdosRenyi(7, 1.0, 1).numEdges() == 21);
    CHECK_THROWS(erdosRenyi(3, 1.5, 1));
    CHECK(erdosRenyi(0, 0.5, 1).numVertices() == 0);
  }
  SECTION("same seed, same graph") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(erdosRenyi(12, 0.4, seed) == erdosRenyi(12, 0.4, seed));
    }
    CHECK_FALSE(erdosRenyi(12, 0.5, 1) == erdosRenyi(12, 0.5, 2));
  }
  SECTION("edge frequency tracks p") {
    std::size_t edges = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) edges += erdosRenyi(10, 0.3, seed).numEdges();
    const double mean = static_cast<double>(edges) / (200.0 * 45.0);
    CHECK(mean == Catch::Approx(0.3).margin(0.02));
  }
}

TEST_CASE("complement") {
  const Graph g = testing::pocGraph();
  const Graph c = complement(g);
  CHECK(c.numEdges() == 15 - 6);
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = u + 1; v < 6; ++v) CHECK(c.hasEdge(u, v) != g.hasEdge(u, v));
  }
  CHECK(complement(c) == g);
}

TEST_CASE("permutations") {
  SECTION("random permutations are bijections and reproducible") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto p = randomPermutation(9, seed);
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> identity(9);
      std::iota(identity.begin(), identity.end(), std::size_t{0});
      CHECK(sorted == identity);
      CHECK(randomPermutation(9, seed) == p);
    }
  }
  SECTION("permuted graphs are isomorphic to the original") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const Graph g = erdosRenyi(6, 0.5, seed);
      const auto perm = randomPermutation(6, seed + 77);
      const Graph h = permuteGraph(g, perm);
      CHECK(h.numEdges() == g.numEdges());
      CHECK(oracle::areIsomorphic(g, h));
      for (const auto& [u, v] : g.edges()) CHECK(h.hasEdge(perm[u], perm[v]));
    }
  }
  SECTION("bad mappings") {
    const Graph g(3);
    CHECK_THROWS(permuteGraph(g, {0, 1}));
    CHECK_THROWS(permuteGraph(g, {0, 0, 1}));
    CHECK_THROWS(permuteGraph(g, {0, 1, 3}));
  }
}
