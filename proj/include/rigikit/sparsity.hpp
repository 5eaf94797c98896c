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

#ifndef RIGIKIT_SPARSITY_HPP_
#define RIGIKIT_SPARSITY_HPP_

#include <map>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

// (k, l)-pebble game. Every vertex starts with k pebbles; an edge is
// accepted when l + 1 pebbles can be gathered on its endpoints, after which
// one pebble covers the edge and orients it out of the endpoint that paid.
// Invariant: pebbles(v) + outdegree(v) = k for every vertex.
//
// Searches are depth-first and visit out-neighbours in increasing label
// order, so the orientation is a deterministic function of the input.
class PebbleGame {
 public:
  // Throws ParameterRange unless k >= 1 and 0 <= l < 2k.
  PebbleGame(const VertexSet& vertices, int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }

  // Tries to insert the edge; returns whether it was accepted.
  bool AddEdge(const Edge& e);

  const EdgeSet& accepted() const { return accepted_; }
  const EdgeSet& rejected() const { return rejected_; }
  int Pebbles(Vertex v) const;
  std::size_t OutDegree(Vertex v) const;
  // Orientation of an accepted edge: {tail, head}.
  std::vector<std::pair<Vertex, Vertex>> Orientation() const;

  // Maximal vertex sets spanning a (k,l)-tight subgraph of the accepted
  // edges (each of them spanning at least one edge). Vertices in no such set
  // are reported as singletons. Sorted by smallest member.
  std::vector<VertexSet> Components();

 private:
  // Gathers pebbles on u and v (up to l + 1 total). Returns the total held.
  int Gather(int u, int v, int want);
  bool FindPebble(int from, std::vector<char>& visited, std::vector<int>& parent_edge_tail);
  void Reverse(int tail, int head);

  int k_;
  int l_;
  std::vector<Vertex> labels_;
  std::map<Vertex, int> index_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;  // sorted out-neighbour indices
  EdgeSet accepted_;
  EdgeSet rejected_;
};

bool IsKLSparse(const Graph& g, int k, int l);
bool IsKLTight(const Graph& g, int k, int l);
std::vector<VertexSet> PebbleComponents(const Graph& g, int k, int l);
// Size of a maximum (k,l)-sparse subset of the edges (the count-matroid rank).
std::size_t SparseRank(const Graph& g, int k, int l);

}  // namespace rigikit

#endif  // RIGIKIT_SPARSITY_HPP_
