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

#include <algorithm>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/generic_rigidity.hpp"

namespace rigikit {
namespace {

Graph C4() { return NamedGraph("Cycle", {4}); }
Graph K(int n) { return NamedGraph("Complete", {n}); }
Graph Prism() { return NamedGraph("ThreePrism"); }
Graph Bowtie() { return Graph::FromEdges({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

GenericOptions Randomized(std::uint64_t seed = 1) {
  return {Algorithm::kRandomized, 1e-6, seed};
}
GenericOptions Sparse() { return {Algorithm::kSparsity, 1e-6, 0}; }

TEST(Generic, RigidExamples) {
  RigidityVerdict v = IsRigid(Prism(), 2);
  EXPECT_TRUE(v.value);
  EXPECT_EQ(v.method, Method::kSparsity);
  EXPECT_EQ(v.failure_probability_bound, 0);
  EXPECT_FALSE(IsRigid(C4(), 2).value);
  EXPECT_TRUE(IsRigid(C4(), 1).value);
  EXPECT_EQ(IsRigid(C4(), 1).method, Method::kConnectivity);
  EXPECT_FALSE(IsRigid(Graph::FromEdges({{0, 1}, {2, 3}}), 1).value);
}

TEST(Generic, MinRigidExamples) {
  EXPECT_TRUE(IsMinRigid(Prism(), 2).value);
  EXPECT_TRUE(IsMinRigid(Prism(), 2, Sparse()).value);
  EXPECT_FALSE(IsMinRigid(K(4), 2).value);
  EXPECT_TRUE(IsRigid(K(4), 2).value);
  EXPECT_TRUE(IsMinRigid(NamedGraph("Path", {4}), 1).value);
  EXPECT_FALSE(IsMinRigid(C4(), 1).value);
}

TEST(Generic, RandomizedVerdictFields) {
  RigidityVerdict yes = IsRigid(Prism(), 2, Randomized(42));
  EXPECT_TRUE(yes.value);
  EXPECT_EQ(yes.method, Method::kRandomized);
  EXPECT_EQ(yes.failure_probability_bound, 0);
  EXPECT_EQ(yes.seed, std::optional<std::uint64_t>(42));
  RigidityVerdict no = IsRigid(C4(), 2, Randomized(42));
  EXPECT_FALSE(no.value);
  EXPECT_EQ(no.failure_probability_bound, 1e-6);
  EXPECT_EQ(IsRigid(K(5), 3).method, Method::kRandomized);
}

TEST(Generic, SmallGraphConvention) {
  EXPECT_TRUE(IsRigid(K(3), 2).value);
  EXPECT_FALSE(IsRigid(NamedGraph("Path", {3}), 2).value);
  EXPECT_TRUE(IsRigid(K(4), 3).value);
  EXPECT_FALSE(IsRigid(K(4).WithoutEdge(0, 1), 3).value);
  EXPECT_TRUE(IsGloballyRigid(K(3), 2).value);
  EXPECT_TRUE(IsRigid(Graph::FromVerticesAndEdges({0}, {}), 2).value);
}

TEST(Generic, Errors) {
  EXPECT_RIGIKIT_ERROR(IsRigid(K(4), 3, Sparse()), kAlgorithmDimMismatch);
  EXPECT_RIGIKIT_ERROR(IsRigid(K(4), 2, {Algorithm::kRandomized, 0.0, 0}), kParameterRange);
  EXPECT_RIGIKIT_ERROR(IsRigid(K(4), 0), kParameterRange);
  EXPECT_RIGIKIT_ERROR(IsGloballyRigid(K(4), 2, Sparse()), kAlgorithmDimMismatch);
  EXPECT_RIGIKIT_ERROR(IsGloballyRigid(K(5), 3, {Algorithm::kRedundancy, 1e-6, 0}),
                       kAlgorithmDimMismatch);
  EXPECT_RIGIKIT_ERROR(ParseAlgorithm("magic"), kBadParams);
  EXPECT_EQ(ParseAlgorithm("randomized"), Algorithm::kRandomized);
  EXPECT_RIGIKIT_ERROR(IsRdIndependent(C4(), {Edge(0, 2)}, 2), kUnknownEdge);
}

TEST(Generic, RedundancyExamples) {
  EXPECT_TRUE(IsKRedundantlyRigid(K(4), 2, 1, false).value);
  EXPECT_FALSE(IsKRedundantlyRigid(Prism(), 2, 1, false).value);
  EXPECT_TRUE(IsKRedundantlyRigid(K(5), 2, 1, true).value);
  EXPECT_FALSE(IsKRedundantlyRigid(K(4), 2, 2, false).value);
  RigidityVerdict r = IsKRedundantlyRigid(K(5), 3, 1, false, Randomized(3));
  EXPECT_TRUE(r.value);
  EXPECT_EQ(r.method, Method::kRandomized);
}

TEST(Generic, GlobalExamples) {
  RigidityVerdict k4 = IsGloballyRigid(K(4), 2);
  EXPECT_TRUE(k4.value);
  EXPECT_EQ(k4.method, Method::kCombinatorial2D);
  EXPECT_FALSE(IsGloballyRigid(Prism(), 2).value);
  EXPECT_FALSE(IsGloballyRigid(C4(), 2).value);
  EXPECT_TRUE(IsGloballyRigid(K(4), 2, Randomized()).value);
  EXPECT_FALSE(IsGloballyRigid(Prism(), 2, Randomized()).value);
  EXPECT_TRUE(IsGloballyRigid(C4(), 1).value);
  EXPECT_FALSE(IsGloballyRigid(NamedGraph("Path", {4}), 1).value);
  EXPECT_TRUE(IsGloballyRigid(K(5), 3).value);
  EXPECT_FALSE(IsGloballyRigid(K(5).WithoutEdge(0, 1), 3).value);
}

TEST(Generic, ComponentsExamples) {
  EXPECT_EQ(RigidComponents(Bowtie(), 2), (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(RigidComponents(Graph::FromEdges({{0, 1}, {2, 3}, {3, 4}}), 1),
            (std::vector<VertexSet>{{0, 1}, {2, 3, 4}}));
  EXPECT_EQ(RigidComponents(Prism(), 2), (std::vector<VertexSet>{{0, 1, 2, 3, 4, 5}}));
  EXPECT_EQ(RigidComponents(K(5).WithoutEdge(3, 4), 3), (std::vector<VertexSet>{{0, 1, 2, 3, 4}}));
  Graph hinge = Combine(K(4), Graph::FromEdges({{0, 1}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}}),
                        CombineMode::kUnion);
  EXPECT_EQ(RigidComponents(hinge, 3, Randomized()),
            (std::vector<VertexSet>{{0, 1, 2, 3}, {0, 1, 4, 5}}));
}

TEST(Generic, MatroidExamples) {
  EXPECT_TRUE(IsRdIndependent(C4(), C4().edges(), 2));
  EXPECT_TRUE(IsRdCircuit(K(4), K(4).edges(), 2));
  Graph k4e = K(4).WithoutEdge(0, 1);
  EXPECT_EQ(RdClosure(k4e, k4e.edges(), 2), K(4).edges());
  EXPECT_FALSE(IsRdClosed(k4e, k4e.edges(), 2));
  EXPECT_EQ(RdRank(K(4), K(4).edges(), 2), 5u);
  EXPECT_EQ(RdRank(K(5), K(5).edges(), 3), 9u);
  EXPECT_TRUE(IsRdCircuit(K(5), K(5).edges(), 3));
}

TEST(Generic, AgreementOnCorpus) {
  std::uint64_t seed = 100;
  for (const Graph& g : oracle::AllGraphs(1, 6)) {
    ++seed;
    bool sparse = IsRigid(g, 2, Sparse()).value;
    EXPECT_EQ(sparse, IsRigid(g, 2, Randomized(seed)).value);
    EXPECT_EQ(IsMinRigid(g, 2, Sparse()).value, IsMinRigid(g, 2, Randomized(seed)).value);
    EXPECT_EQ(IsRigid(g, 1).value, IsConnected(g));
    bool global = IsGloballyRigid(g, 2, Randomized(seed)).value;
    if (global) EXPECT_TRUE(sparse);
    EXPECT_EQ(global, IsGloballyRigid(g, 2).value);
    for (Vertex a : g.vertices()) {
      for (Vertex b : g.vertices()) {
        if (a < b && !g.HasEdge(a, b) && sparse) {
          EXPECT_TRUE(IsRigid(g.WithEdge(a, b), 2).value);
        }
      }
    }
  }
}

TEST(Generic, RandomizedRankMatchesSparseRank) {
  std::uint64_t seed = 7;
  for (const Graph& g : oracle::AllGraphs(2, 6)) {
    EXPECT_EQ(RandomizedRank(g, g.edges(), 2, ++seed, 1e-6), oracle::GreedyCountRank(g, g.edges(), 2, 3));
  }
}

bool IsForest(const Graph& g, const EdgeSet& edges) {
  return oracle::SubsetCountSparse(g.SpanningSubgraph(edges), 1, 1);
}

std::vector<EdgeSet> Subsets(const EdgeSet& edges) {
  std::vector<Edge> list(edges.begin(), edges.end());
  std::vector<EdgeSet> out;
  for (std::uint32_t mask = 0; mask < (1u << list.size()); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask & (1u << i)) s.insert(list[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

TEST(Generic, GraphicMatroidInDimensionOne) {
  for (const Graph& g : oracle::AllGraphs(1, 5)) {
    for (const EdgeSet& s : Subsets(g.edges())) {
      EXPECT_EQ(IsRdIndependent(g, s, 1), IsForest(g, s));
    }
  }
  for (const Graph& g : oracle::AllGraphs(6, 6)) {
    EXPECT_EQ(IsRdIndependent(g, g.edges(), 1), IsForest(g, g.edges()));
  }
}

TEST(Generic, MatroidAxiomsDimensionTwo) {
  for (const Graph& g : oracle::AllGraphs(1, 5)) {
    Graph kn = NamedGraph("Complete", {static_cast<std::int64_t>(g.num_vertices())});
    for (const EdgeSet& s : Subsets(g.edges())) {
      EdgeSet cl = RdClosure(g, s, 2);
      EXPECT_TRUE(std::includes(cl.begin(), cl.end(), s.begin(), s.end()));
      EXPECT_EQ(RdClosure(kn, cl, 2), cl);
      for (const Edge& e : g.edges()) {
        if (s.count(e)) continue;
        EdgeSet bigger = s;
        bigger.insert(e);
        EdgeSet cl2 = RdClosure(g, bigger, 2);
        EXPECT_TRUE(std::includes(cl2.begin(), cl2.end(), cl.begin(), cl.end()));
      }
      bool independent = oracle::GreedyCountRank(g, s, 2, 3) == s.size();
      EXPECT_EQ(IsRdIndependent(g, s, 2), independent);
      bool circuit = !independent && !s.empty();
      for (const Edge& e : s) {
        EdgeSet minus = s;
        minus.erase(e);
        if (oracle::GreedyCountRank(g, minus, 2, 3) != minus.size()) circuit = false;
      }
      EXPECT_EQ(IsRdCircuit(g, s, 2), circuit);
    }
  }
}

}  // namespace
}  // namespace rigikit
