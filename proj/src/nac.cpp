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

#include "rigikit/nac.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rigikit/error.hpp"

namespace rigikit {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t Find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Unite(std::size_t a, std::size_t b) { parent[Find(a)] = Find(b); }
  std::vector<std::size_t> parent;
};

// For each vertex, the component index in the subgraph with only `edges`.
std::map<Vertex, std::size_t> ComponentOf(const Graph& g, const EdgeSet& edges) {
  std::map<Vertex, std::size_t> out;
  std::size_t i = 0;
  for (const auto& comp : ConnectedComponents(Graph::FromSets(g.vertices(), edges))) {
    for (Vertex v : comp) out[v] = i;
    ++i;
  }
  return out;
}

bool Crosses(const Graph& g, const EdgeSet& inside, const EdgeSet& other) {
  auto comp = ComponentOf(g, other);
  for (const Edge& e : inside) {
    if (comp.at(e.u) == comp.at(e.v)) return true;
  }
  return false;
}

}  // namespace

std::vector<EdgeSet> MonochromaticClasses(const Graph& g) {
  auto edges = g.EdgeList();
  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  UnionFind uf(edges.size());
  for (const Edge& e : edges) {
    for (Vertex w : g.Neighbors(e.u)) {
      if (w != e.v && g.HasEdge(w, e.v)) {
        uf.Unite(index[e], index[Edge(e.u, w)]);
        uf.Unite(index[e], index[Edge(e.v, w)]);
      }
    }
  }
  std::map<std::size_t, EdgeSet> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) groups[uf.Find(i)].insert(edges[i]);
  std::vector<EdgeSet> out;
  for (auto& [root, cls] : groups) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

bool IsNacColoring(const Graph& g, const NacColoring& c) {
  for (const Edge& e : c.red) {
    if (c.blue.count(e)) throw Error(ErrorCode::kNotAPartition, "an edge is both red and blue");
  }
  if (c.red.size() + c.blue.size() != g.num_edges()) {
    throw Error(ErrorCode::kNotAPartition, "the coloring must cover exactly the edges of the graph");
  }
  for (const EdgeSet* side : {&c.red, &c.blue}) {
    for (const Edge& e : *side) {
      if (!g.edges().count(e)) throw Error(ErrorCode::kNotAPartition, "colored edge is not in the graph");
    }
  }
  if (c.red.empty() || c.blue.empty()) return false;
  return !Crosses(g, c.red, c.blue) && !Crosses(g, c.blue, c.red);
}

std::vector<NacColoring> NacColorings(const Graph& g, std::optional<std::size_t> limit) {
  std::vector<NacColoring> out;
  auto classes = MonochromaticClasses(g);
  if (classes.size() < 2) return out;
  if (classes.size() > 62) throw Error(ErrorCode::kParameterRange, "too many monochromatic classes");
  // Class 0 holds the smallest edge and stays red; bit i colors class i+1 blue.
  const std::uint64_t count = std::uint64_t{1} << (classes.size() - 1);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    NacColoring c;
    c.red = classes[0];
    for (std::size_t i = 1; i < classes.size(); ++i) {
      auto& side = (mask >> (i - 1)) & 1 ? c.blue : c.red;
      side.insert(classes[i].begin(), classes[i].end());
    }
    if (IsNacColoring(g, c)) {
      out.push_back(std::move(c));
      if (limit && out.size() >= *limit) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const NacColoring& a, const NacColoring& b) {
    return std::lexicographical_compare(a.red.begin(), a.red.end(), b.red.begin(), b.red.end());
  });
  return out;
}

std::optional<VertexSet> StableSeparatingSet(const Graph& g) {
  auto vs = g.VertexList();
  for (std::size_t k = 1; k + 2 <= vs.size(); ++k) {
    for (const auto& combo : Combinations(vs, k)) {
      VertexSet s(combo.begin(), combo.end());
      bool stable = true;
      for (std::size_t i = 0; i < combo.size() && stable; ++i) {
        for (std::size_t j = i + 1; j < combo.size() && stable; ++j) {
          if (g.HasEdge(combo[i], combo[j])) stable = false;
        }
      }
      if (stable && ConnectedComponents(g.WithoutVertices(s)).size() >= 2) return s;
    }
  }
  return std::nullopt;
}

}  // namespace rigikit
