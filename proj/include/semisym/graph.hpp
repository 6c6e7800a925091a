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
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semisym {

/// Undirected simple graph. Edges are stored as (u,v) with u < v.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  explicit Graph(std::size_t numVertices) : numVertices_(numVertices) {}

  std::size_t numVertices() const { return numVertices_; }
  std::size_t numEdges() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  /// Inserts {u,v}; duplicates collapse. Throws on self-loops and
  /// out-of-range endpoints.
  void addEdge(std::size_t u, std::size_t v);
  bool hasEdge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t numVertices_ = 0;
  std::set<Edge> edges_;
};

/// Edge-list format: "graph <n>" then one "<u> <v>" line per edge.
/// '#' starts a comment. Errors carry the offending line number.
Graph parseEdgeList(std::string_view text);
std::string formatEdgeList(const Graph& g);

/// G(n, p) random graph. Pairs (u,v), u < v, are visited row-major and one
/// 64-bit draw of std::mt19937_64 (whose output sequence is fixed by the
/// C++ standard) decides each pair: the top 53 bits form u in [0,1) and the
/// edge is kept iff u < pEdge.
Graph erdosRenyi(std::size_t n, double pEdge, std::uint64_t seed);

Graph complement(const Graph& g);

/// Relabels vertex v as perm[v].
Graph permuteGraph(const Graph& g, const std::vector<std::size_t>& perm);

/// Fisher-Yates shuffle of 0..n-1 driven by std::mt19937_64 with an
/// unbiased rejection draw, so the result is identical on every platform.
std::vector<std::size_t> randomPermutation(std::size_t n, std::uint64_t seed);

}  // namespace semisym
