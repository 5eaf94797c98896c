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

#include <gtest/gtest.h>

#include <random>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/generic_rigidity.hpp"

namespace rigikit {
namespace {

Graph K(int n) { return NamedGraph("Complete", {n}); }

TEST(Constructions, ConeExamples) {
  Graph w4 = Cone(NamedGraph("Cycle", {4}));
  EXPECT_EQ(w4.num_edges(), 8u);
  EXPECT_EQ(w4.Degree(4), 4u);
  EXPECT_EQ(Cone(K(3)), K(4));
  EXPECT_EQ(Cone(Graph::FromVerticesAndEdges({0}, {})).num_edges(), 1u);
  EXPECT_EQ(Cone(K(3), 9).Degree(9), 3u);
  EXPECT_RIGIKIT_ERROR(Cone(K(3), 1), kVertexExists);
}

TEST(Constructions, ExtensionExamples) {
  Graph k4e = KExtension(K(3), 2, 0, {}, {0, 1});
  EXPECT_EQ(k4e, K(4).WithoutEdge(2, 3));
  Graph one = KExtension(K(4), 2, 1, {Edge(0, 1)}, {0, 1, 2});
  EXPECT_EQ(one.num_vertices(), 5u);
  EXPECT_EQ(one.num_edges(), 8u);
  EXPECT_FALSE(one.HasEdge(0, 1));
  EXPECT_RIGIKIT_ERROR(KExtension(K(3), 2, 0, {}, {0}), kBadBaseSet);
  EXPECT_RIGIKIT_ERROR(KExtension(K(4), 2, 1, {Edge(0, 1)}, {1, 2, 3}), kBadBaseSet);
  EXPECT_RIGIKIT_ERROR(KExtension(K(3), 2, 1, {}, {0, 1, 2}), kBadRemovedSet);
  EXPECT_RIGIKIT_ERROR(KExtension(NamedGraph("Path", {4}), 2, 1, {Edge(0, 2)}, {0, 1, 2}),
                       kBadRemovedSet);
  EXPECT_RIGIKIT_ERROR(KExtension(K(3), 2, 0, {}, {0, 7}), kBadBaseSet);
  EXPECT_RIGIKIT_ERROR(KExtension(K(3), 2, 0, {}, {0, 1}, 2), kVertexExists);
}

TEST(Constructions, CombineExamples) {
  Graph a = Graph::FromEdges({{0, 1}, {1, 2}, {0, 2}});
  Graph b = Graph::FromEdges({{0, 1}, {1, 3}, {0, 3}});
  EXPECT_EQ(Combine(a, b, CombineMode::kUnion), K(4).WithoutEdge(2, 3));
  EXPECT_EQ(Combine(a, a, CombineMode::kIntersection), a);
  Graph c = Graph::FromEdges({{5, 6}});
  Graph empty = Combine(a, c, CombineMode::kIntersection);
  EXPECT_EQ(empty.num_vertices(), 0u);
  EXPECT_EQ(empty.num_edges(), 0u);
}

TEST(Constructions, NamedGraphGoldens) {
  EXPECT_EQ(NamedGraph("ThreePrism").EdgeList(),
            (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}));
  EXPECT_EQ(NamedGraph("CompleteBipartite", {2, 4}).EdgeList(),
            (std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  EXPECT_EQ(NamedGraph("Cycle", {4}).EdgeList(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(NamedGraph("Path", {3}).EdgeList(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(NamedGraph("Diamond").EdgeList(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(K(5).num_edges(), 10u);
  EXPECT_EQ(K(1).num_vertices(), 1u);
  EXPECT_RIGIKIT_ERROR(NamedGraph("Petersen"), kUnknownName);
  EXPECT_RIGIKIT_ERROR(NamedGraph("Cycle", {2}), kBadParams);
  EXPECT_RIGIKIT_ERROR(NamedGraph("Complete"), kBadParams);
  EXPECT_FALSE(NamedGraphNames().empty());
}

TEST(Constructions, NamedFrameworks) {
  Framework prism = NamedFramework("ThreePrism", {}, "parallel");
  const std::map<Vertex, std::pair<int, int>> expected = {{0, {0, 0}}, {1, {2, 0}}, {2, {1, 2}},
                                                          {3, {0, 6}}, {4, {2, 6}}, {5, {1, 4}}};
  for (const auto& [v, xy] : expected) {
    EXPECT_EQ(prism.Position(v)[0].exact(), xy.first);
    EXPECT_EQ(prism.Position(v)[1].exact(), xy.second);
  }
  Framework k24 = NamedFramework("CompleteBipartite", {2, 4});
  EXPECT_EQ(k24.graph().num_edges(), 8u);
  EXPECT_EQ(k24.mode(), Mode::kExact);
  EXPECT_EQ(NamedFramework("Cycle", {5}).mode(), Mode::kApprox);
  EXPECT_RIGIKIT_ERROR(NamedFramework("ThreePrism", {}, "skew"), kBadParams);
}

// Random connected graphs on <= 6 vertices that are generically 2-rigid.
std::vector<Graph> RigidSamples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, 6);
  std::vector<Graph> out;
  while (out.size() < count) {
    Graph g = oracle::RandomGraph(size(rng), 0.6, rng);
    if (g.num_vertices() >= 3 && IsConnected(g) && IsRigid(g, 2).value) out.push_back(g);
  }
  return out;
}

TEST(Constructions, ConePreservesRigidity) {
  GenericOptions opts{Algorithm::kRandomized, 1e-6, 5};
  for (const Graph& g : oracle::AllGraphs(1, 6)) {
    ++opts.seed;
    if (IsRigid(g, 2).value) EXPECT_TRUE(IsRigid(Cone(g), 3, opts).value);
    if (IsGloballyRigid(g, 2).value) EXPECT_TRUE(IsGloballyRigid(Cone(g), 3, opts).value);
  }
}

TEST(Constructions, ExtensionsPreserveRigidity) {
  GenericOptions sparse{Algorithm::kSparsity, 1e-6, 0};
  for (const Graph& g : RigidSamples(40, 77)) {
    std::vector<Vertex> verts = g.VertexList();
    for (const auto& base : Combinations(verts, 2)) {
      Graph h = KExtension(g, 2, 0, {}, {base.begin(), base.end()});
      EXPECT_TRUE(IsRigid(h, 2, sparse).value);
    }
    for (const Edge& e : g.edges()) {
      for (Vertex w : verts) {
        if (e.Touches(w)) continue;
        Graph h = KExtension(g, 2, 1, {e}, {e.u, e.v, w});
        EXPECT_TRUE(IsRigid(h, 2, sparse).value);
      }
    }
  }
}

}  // namespace
}  // namespace rigikit
