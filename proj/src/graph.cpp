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

#include "semisym/graph.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "semisym/parse_error.hpp"

namespace semisym {

void Graph::addEdge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (u >= numVertices_ || v >= numVertices_) {
    throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [0," + std::to_string(numVertices_) + ")");
  }
  if (u > v) std::swap(u, v);
  edges_.insert({u, v});
}

bool Graph::hasEdge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

Graph parseEdgeList(std::string_view text) {
  const auto lines = detail::tokenizeLines(text);
  if (lines.empty()) throw ParseError(0, "missing 'graph <numVertices>' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "graph") {
    throw ParseError(header.number, "expected 'graph <numVertices>' header");
  }
  Graph g(detail::parseIndex(header.tokens[1], header.number));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    const std::size_t u = detail::parseIndex(line.tokens[0], line.number);
    const std::size_t v = detail::parseIndex(line.tokens[1], line.number);
    if (u == v) throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
    if (u >= g.numVertices() || v >= g.numVertices()) {
      throw ParseError(line.number, "vertex out of range");
    }
    g.addEdge(u, v);
  }
  return g;
}

std::string formatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.numVertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph erdosRenyi(std::size_t n, double pEdge, std::uint64_t seed) {
  if (!(pEdge >= 0.0 && pEdge <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < pEdge) g.addEdge(u, v);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.numVertices());
  for (std::size_t u = 0; u < g.numVertices(); ++u) {
    for (std::size_t v = u + 1; v < g.numVertices(); ++v) {
      if (!g.hasEdge(u, v)) out.addEdge(u, v);
    }
  }
  return out;
}

Graph permuteGraph(const Graph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.numVertices()) {
    throw std::invalid_argument("permutation length does not match vertex count");
  }
  std::vector<bool> hit(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || hit[p]) throw std::invalid_argument("mapping is not a bijection");
    hit[p] = true;
  }
  Graph out(g.numVertices());
  for (const auto& [u, v] : g.edges()) out.addEdge(perm[u], perm[v]);
  return out;
}

std::vector<std::size_t> randomPermutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    // uniform draw in [0, i) by rejection
    const std::uint64_t bound = i;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    std::swap(perm[i - 1], perm[r % bound]);
  }
  return perm;
}

}  // namespace semisym
