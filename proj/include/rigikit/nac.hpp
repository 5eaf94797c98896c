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

#ifndef RIGIKIT_NAC_HPP_
#define RIGIKIT_NAC_HPP_

#include <optional>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

struct NacColoring {
  EdgeSet red;
  EdgeSet blue;
  friend bool operator==(const NacColoring&, const NacColoring&) = default;
};

// Partition of E into classes closed under "share a triangle", sorted by
// smallest edge.
std::vector<EdgeSet> MonochromaticClasses(const Graph& g);

// True iff both colors occur and no edge of one color joins two vertices of
// the same component of the other color. Throws NotAPartition.
bool IsNacColoring(const Graph& g, const NacColoring& c);

// All NAC-colorings up to swapping colors; the class of the smallest edge is
// red. Stops after `limit` colorings when given.
std::vector<NacColoring> NacColorings(const Graph& g, std::optional<std::size_t> limit = std::nullopt);

// Smallest independent vertex set whose removal leaves at least two
// components; ties broken lexicographically.
std::optional<VertexSet> StableSeparatingSet(const Graph& g);

}  // namespace rigikit

#endif  // RIGIKIT_NAC_HPP_
