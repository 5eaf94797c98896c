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

#ifndef RIGIKIT_GENERIC_RIGIDITY_HPP_
#define RIGIKIT_GENERIC_RIGIDITY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

enum class Algorithm { kDefault, kSparsity, kRandomized, kRedundancy };
enum class Method { kConnectivity, kSparsity, kRandomized, kCombinatorial2D };

std::string_view AlgorithmName(Algorithm a);
std::string_view MethodName(Method m);
// Throws BadParams for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct GenericOptions {
  Algorithm algorithm = Algorithm::kDefault;
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
};

// A `true` verdict is always certain. For randomized checks a `false`
// verdict is wrong with probability at most failure_probability_bound.
struct RigidityVerdict {
  bool value = false;
  Method method = Method::kConnectivity;
  double failure_probability_bound = 0;
  std::optional<std::uint64_t> seed;

  explicit operator bool() const { return value; }
};

// Graphs with at most dim + 1 vertices are rigid (and globally rigid) iff
// complete.
RigidityVerdict IsRigid(const Graph& g, int dim, const GenericOptions& opts = {});
RigidityVerdict IsMinRigid(const Graph& g, int dim, const GenericOptions& opts = {});
RigidityVerdict IsKRedundantlyRigid(const Graph& g, int dim, int k, bool vertex,
                                    const GenericOptions& opts = {});
RigidityVerdict IsGloballyRigid(const Graph& g, int dim, const GenericOptions& opts = {});

// Maximal rigid vertex sets, sorted. Isolated vertices form singletons.
std::vector<VertexSet> RigidComponents(const Graph& g, int dim, const GenericOptions& opts = {});

// Exact rank of the rigidity matrix at a random integer realization.
std::size_t RandomizedRank(const Graph& g, const EdgeSet& edges, int dim, std::uint64_t seed,
                           double epsilon);

// Rank function of the generic d-dimensional rigidity matroid on edges
// over the vertex set of g (deterministic for dim 1 and 2).
std::size_t RdRank(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts = {});
bool IsRdIndependent(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts = {});
bool IsRdCircuit(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts = {});
// All vertex pairs of g whose addition keeps the rank.
EdgeSet RdClosure(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts = {});
bool IsRdClosed(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts = {});

}  // namespace rigikit

#endif  // RIGIKIT_GENERIC_RIGIDITY_HPP_
