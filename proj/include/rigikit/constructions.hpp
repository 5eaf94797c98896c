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

#ifndef RIGIKIT_CONSTRUCTIONS_HPP_
#define RIGIKIT_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigikit/framework.hpp"
#include "rigikit/graph.hpp"

namespace rigikit {

// Adds apex (default max(V) + 1) joined to every vertex. Throws VertexExists.
Graph Cone(const Graph& g, std::optional<Vertex> apex = std::nullopt);

// Removes the k edges in `removed`, adds new_vertex (default max(V) + 1) and
// joins it to the d + k vertices of `base`, which must contain every
// endpoint of a removed edge.
Graph KExtension(const Graph& g, int d, int k, const EdgeSet& removed, const VertexSet& base,
                 std::optional<Vertex> new_vertex = std::nullopt);

enum class CombineMode { kUnion, kIntersection };
Graph Combine(const Graph& g, const Graph& h, CombineMode mode);

// Names: Complete(n), CompleteBipartite(m,n), Cycle(n), Path(n), ThreePrism,
// Diamond. Throws UnknownName / BadParams.
Graph NamedGraph(std::string_view name, const std::vector<std::int64_t>& params = {});

// Framework variants:
//   ThreePrism        variant "generic" (default) or "parallel", exact
//   CompleteBipartite part {0..m-1} on the y-axis, the other part on a circle, exact
//   Diamond           unit square with diagonal 02, exact
//   Cycle, Complete   regular polygon of circumradius 1, approximate
Framework NamedFramework(std::string_view name, const std::vector<std::int64_t>& params = {},
                         std::string_view variant = "");

// Database names, for listings.
std::vector<std::string> NamedGraphNames();

}  // namespace rigikit

#endif  // RIGIKIT_CONSTRUCTIONS_HPP_
