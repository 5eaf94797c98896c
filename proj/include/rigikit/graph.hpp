// Copyright 2026 The rigikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RIGIKIT_GRAPH_HPP_
#define RIGIKIT_GRAPH_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace rigikit {

using Vertex = std::int64_t;

// Unordered vertex pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool Touches(Vertex w) const { return u == w || v == w; }
  Vertex Other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<Edge>;

// Simple, loopless, undirected graph over non-negative integer labels.
// Values are immutable; the With*/Without* methods return modified copies.
class Graph {
 public:
  Graph() = default;

  // Vertex set is the union of the endpoints; duplicates collapse.
  // Throws LoopEdge for (v, v).
  static Graph FromEdges(const std::vector<std::pair<Vertex, Vertex>>& edges);
  // Keeps isolated vertices; throws UnknownVertex if an endpoint is missing.
  static Graph FromVerticesAndEdges(const std::vector<Vertex>& vertices,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges);
  static Graph FromSets(VertexSet vertices, EdgeSet edges);

  const VertexSet& vertices() const { return vertices_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::vector<Vertex> VertexList() const { return {vertices_.begin(), vertices_.end()}; }
  std::vector<Edge> EdgeList() const { return {edges_.begin(), edges_.end()}; }

  bool HasVertex(Vertex v) const { return vertices_.count(v) != 0; }
  bool HasEdge(Vertex a, Vertex b) const { return a != b && edges_.count(Edge(a, b)) != 0; }
  bool IsComplete() const;
  std::vector<Vertex> Neighbors(Vertex v) const;
  std::size_t Degree(Vertex v) const;
  Vertex MaxVertex() const { return vertices_.empty() ? -1 : *vertices_.rbegin(); }

  Graph WithVertex(Vertex v) const;
  Graph WithEdge(Vertex a, Vertex b) const;
  Graph WithoutEdge(Vertex a, Vertex b) const;
  Graph WithoutEdges(const EdgeSet& edges) const;
  Graph WithoutVertex(Vertex v) const;
  Graph WithoutVertices(const VertexSet& vs) const;
  // Subgraph induced by the given vertices.
  Graph Induced(const VertexSet& vs) const;
  // Spanning subgraph on the same vertex set with only the given edges.
  Graph SpanningSubgraph(const EdgeSet& edges) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  EdgeSet edges_;
};

std::vector<VertexSet> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

// True iff |V| > k and no vertex subset of size < k disconnects g.
bool IsVertexConnected(const Graph& g, int k);

// All k-element subsets of the given items, in lexicographic order.
template <typename T>
std::vector<std::vector<T>> Combinations(const std::vector<T>& items, std::size_t k) {
  std::vector<std::vector<T>> out;
  if (k > items.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<T> combo;
    combo.reserve(k);
    for (auto i : idx) combo.push_back(items[i]);
    out.push_back(std::move(combo));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace rigikit

#endif  // RIGIKIT_GRAPH_HPP_
