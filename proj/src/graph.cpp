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

#include "rigikit/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rigikit/error.hpp"

namespace rigikit {

namespace {

void CheckLabel(Vertex v) {
  if (v < 0) {
    throw Error(ErrorCode::kBadParams, "vertex labels must be non-negative, got " +
                                           std::to_string(v));
  }
}

Edge MakeEdge(Vertex a, Vertex b) {
  CheckLabel(a);
  CheckLabel(b);
  if (a == b) {
    throw Error(ErrorCode::kLoopEdge, "loop edge at vertex " + std::to_string(a));
  }
  return Edge(a, b);
}

}  // namespace

Graph Graph::FromEdges(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  for (const auto& [a, b] : edges) {
    g.edges_.insert(MakeEdge(a, b));
    g.vertices_.insert(a);
    g.vertices_.insert(b);
  }
  return g;
}

Graph Graph::FromVerticesAndEdges(const std::vector<Vertex>& vertices,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  for (Vertex v : vertices) {
    CheckLabel(v);
    g.vertices_.insert(v);
  }
  for (const auto& [a, b] : edges) {
    Edge e = MakeEdge(a, b);
    if (!g.HasVertex(a) || !g.HasVertex(b)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has an endpoint outside the vertex list");
    }
    g.edges_.insert(e);
  }
  return g;
}

Graph Graph::FromSets(VertexSet vertices, EdgeSet edges) {
  Graph g;
  for (Vertex v : vertices) CheckLabel(v);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::kLoopEdge, "loop edge");
    if (!vertices.count(e.u) || !vertices.count(e.v)) {
      throw Error(ErrorCode::kUnknownVertex, "edge endpoint outside the vertex set");
    }
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::IsComplete() const {
  std::size_t n = vertices_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<Vertex> Graph::Neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    if (e.Touches(v)) out.push_back(e.Other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::Degree(Vertex v) const { return Neighbors(v).size(); }

Graph Graph::WithVertex(Vertex v) const {
  CheckLabel(v);
  Graph g = *this;
  g.vertices_.insert(v);
  return g;
}

Graph Graph::WithEdge(Vertex a, Vertex b) const {
  Graph g = *this;
  g.edges_.insert(MakeEdge(a, b));
  g.vertices_.insert(a);
  g.vertices_.insert(b);
  return g;
}

Graph Graph::WithoutEdge(Vertex a, Vertex b) const {
  Graph g = *this;
  g.edges_.erase(Edge(a, b));
  return g;
}

Graph Graph::WithoutEdges(const EdgeSet& edges) const {
  Graph g = *this;
  for (const Edge& e : edges) g.edges_.erase(e);
  return g;
}

Graph Graph::WithoutVertex(Vertex v) const { return WithoutVertices({v}); }

Graph Graph::WithoutVertices(const VertexSet& vs) const {
  Graph g;
  for (Vertex v : vertices_) {
    if (!vs.count(v)) g.vertices_.insert(v);
  }
  for (const Edge& e : edges_) {
    if (!vs.count(e.u) && !vs.count(e.v)) g.edges_.insert(e);
  }
  return g;
}

Graph Graph::Induced(const VertexSet& vs) const {
  Graph g;
  for (Vertex v : vs) {
    if (vertices_.count(v)) g.vertices_.insert(v);
  }
  for (const Edge& e : edges_) {
    if (vs.count(e.u) && vs.count(e.v)) g.edges_.insert(e);
  }
  return g;
}

Graph Graph::SpanningSubgraph(const EdgeSet& edges) const {
  Graph g;
  g.vertices_ = vertices_;
  for (const Edge& e : edges) {
    if (!edges_.count(e)) {
      throw Error(ErrorCode::kUnknownEdge, "edge (" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + ") is not in the graph");
    }
    g.edges_.insert(e);
  }
  return g;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  // Union-find over the sorted vertex list.
  std::map<Vertex, Vertex> parent;
  for (Vertex v : g.vertices()) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : g.edges()) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Vertex, VertexSet> groups;
  for (Vertex v : g.vertices()) groups[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

bool IsConnected(const Graph& g) { return ConnectedComponents(g).size() <= 1; }

bool IsVertexConnected(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kParameterRange, "k must be at least 1");
  if (g.num_vertices() <= static_cast<std::size_t>(k)) return false;
  std::vector<Vertex> vs = g.VertexList();
  for (int size = 0; size < k; ++size) {
    for (const auto& removed : Combinations(vs, static_cast<std::size_t>(size))) {
      Graph h = g.WithoutVertices(VertexSet(removed.begin(), removed.end()));
      if (!IsConnected(h)) return false;
    }
  }
  return true;
}

}  // namespace rigikit
