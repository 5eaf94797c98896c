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

#ifndef RIGIKIT_JSON_CODEC_HPP_
#define RIGIKIT_JSON_CODEC_HPP_

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "rigikit/framework.hpp"
#include "rigikit/generic_rigidity.hpp"
#include "rigikit/motion.hpp"
#include "rigikit/nac.hpp"

namespace rigikit {

using Json = nlohmann::ordered_json;

// Parses JSON text; throws SchemaError on malformed input.
Json ParseJson(std::string_view text);

// {"vertices": [...], "edges": [[u, v], ...]} with sorted vertices and
// lexicographically sorted edges, u < v.
Json EncodeGraph(const Graph& g);
Graph DecodeGraph(const Json& doc, const std::string& path = "");

// {"graph": ..., "realization": {"v": ["expr", ...]}, "mode": "exact"|"approx"}.
// Source expression strings are written back verbatim.
Json EncodeFramework(const Framework& f);
Framework DecodeFramework(const Json& doc, const std::string& path = "");

// Parametric motions carry the expression table and interval, approximate
// motions the sample list. Decoding a parametric motion re-validates it.
Json EncodeMotion(const Motion& m);
Motion DecodeMotion(const Json& doc, const std::string& path = "");

Json EncodeRealization(const Realization& r);
Json EncodeFlex(const Flex& q);
Json EncodeStress(const Stress& w);
Json EncodeVerdict(const RigidityVerdict& v);
Json EncodeNacColoring(const NacColoring& c);
Json EncodeVertexSet(const VertexSet& s);

std::string ScalarText(const Scalar& s);

}  // namespace rigikit

#endif  // RIGIKIT_JSON_CODEC_HPP_
