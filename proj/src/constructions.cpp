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

#include "rigikit/constructions.hpp"

#include <cmath>
#include <numbers>

#include "rigikit/error.hpp"

namespace rigikit {

namespace {

Vertex FreshLabel(const Graph& g, std::optional<Vertex> wanted) {
  Vertex v = wanted.value_or(g.MaxVertex() + 1);
  if (g.HasVertex(v)) {
    throw Error(ErrorCode::kVertexExists, "vertex " + std::to_string(v) + " already exists");
  }
  if (v < 0) throw Error(ErrorCode::kBadParams, "vertex labels must be non-negative");
  return v;
}

}  // namespace

Graph Cone(const Graph& g, std::optional<Vertex> apex) {
  Vertex a = FreshLabel(g, apex);
  Graph out = g.WithVertex(a);
  for (Vertex v : g.vertices()) out = out.WithEdge(a, v);
  return out;
}

Graph KExtension(const Graph& g, int d, int k, const EdgeSet& removed, const VertexSet& base,
                 std::optional<Vertex> new_vertex) {
  if (d < 1 || k < 0) throw Error(ErrorCode::kParameterRange, "need d >= 1 and k >= 0");
  if (removed.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kBadRemovedSet, "exactly k edges must be removed",
                "k=" + std::to_string(k) + ";removed=" + std::to_string(removed.size()));
  }
  for (const Edge& e : removed) {
    if (!g.edges().count(e)) {
      throw Error(ErrorCode::kBadRemovedSet,
                  "removed edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not in the graph");
    }
  }
  if (base.size() != static_cast<std::size_t>(d + k)) {
    throw Error(ErrorCode::kBadBaseSet, "base must have d + k vertices",
                "expected=" + std::to_string(d + k) + ";got=" + std::to_string(base.size()));
  }
  for (Vertex v : base) {
    if (!g.HasVertex(v)) throw Error(ErrorCode::kBadBaseSet, "base vertex " + std::to_string(v) + " is not in the graph");
  }
  for (const Edge& e : removed) {
    if (!base.count(e.u) || !base.count(e.v)) {
      throw Error(ErrorCode::kBadBaseSet, "base must contain the endpoints of removed edges");
    }
  }
  Vertex v = FreshLabel(g, new_vertex);
  Graph out = g.WithoutEdges(removed).WithVertex(v);
  for (Vertex b : base) out = out.WithEdge(v, b);
  return out;
}

Graph Combine(const Graph& g, const Graph& h, CombineMode mode) {
  VertexSet vs;
  EdgeSet es;
  if (mode == CombineMode::kUnion) {
    vs = g.vertices();
    vs.insert(h.vertices().begin(), h.vertices().end());
    es = g.edges();
    es.insert(h.edges().begin(), h.edges().end());
  } else {
    for (Vertex v : g.vertices()) {
      if (h.HasVertex(v)) vs.insert(v);
    }
    for (const Edge& e : g.edges()) {
      if (h.edges().count(e)) es.insert(e);
    }
  }
  return Graph::FromSets(std::move(vs), std::move(es));
}

// --- database --------------------------------------------------------------

namespace {

void ExpectParams(std::string_view name, const std::vector<std::int64_t>& params, std::size_t count,
                  std::int64_t minimum) {
  if (params.size() != count) {
    throw Error(ErrorCode::kBadParams,
                std::string(name) + " takes " + std::to_string(count) + " parameter(s)",
                "got=" + std::to_string(params.size()));
  }
  for (auto p : params) {
    if (p < minimum || p > 4096) {
      throw Error(ErrorCode::kBadParams, std::string(name) + " parameter out of range",
                  "value=" + std::to_string(p));
    }
  }
}

Graph WithVertices(std::int64_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < n; ++v) vs.push_back(v);
  return Graph::FromVerticesAndEdges(vs, edges);
}

const std::vector<std::pair<Vertex, Vertex>> kThreePrismEdges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};

Rational Frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Point Exact(long x, long y) { return {Scalar(Rational(x)), Scalar(Rational(y))}; }

// Regular n-gon of circumradius 1, vertex 0 at angle 0.
Realization Polygon(std::int64_t n) {
  Realization r;
  for (Vertex v = 0; v < n; ++v) {
    double a = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n);
    r[v] = {Scalar(std::cos(a)), Scalar(std::sin(a))};
  }
  return r;
}

// Rational point on the circle of radius `radius` with half-angle tangent s.
Point CirclePoint(const Rational& radius, const Rational& s) {
  Rational den = 1 + s * s;
  return {Scalar(radius * (1 - s * s) / den), Scalar(radius * 2 * s / den)};
}

}  // namespace

std::vector<std::string> NamedGraphNames() {
  return {"Complete", "CompleteBipartite", "Cycle", "Path", "ThreePrism", "Diamond"};
}

Graph NamedGraph(std::string_view name, const std::vector<std::int64_t>& params) {
  if (name == "Complete") {
    ExpectParams(name, params, 1, 1);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < params[0]; ++i) {
      for (Vertex j = i + 1; j < params[0]; ++j) e.emplace_back(i, j);
    }
    return WithVertices(params[0], e);
  }
  if (name == "CompleteBipartite") {
    ExpectParams(name, params, 2, 1);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < params[0]; ++i) {
      for (Vertex j = 0; j < params[1]; ++j) e.emplace_back(i, params[0] + j);
    }
    return WithVertices(params[0] + params[1], e);
  }
  if (name == "Cycle") {
    ExpectParams(name, params, 1, 3);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < params[0]; ++i) e.emplace_back(i, (i + 1) % params[0]);
    return WithVertices(params[0], e);
  }
  if (name == "Path") {
    ExpectParams(name, params, 1, 1);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < params[0]; ++i) e.emplace_back(i, i + 1);
    return WithVertices(params[0], e);
  }
  if (name == "ThreePrism") {
    ExpectParams(name, params, 0, 0);
    return Graph::FromEdges(kThreePrismEdges);
  }
  if (name == "Diamond") {
    ExpectParams(name, params, 0, 0);
    return Graph::FromEdges({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  }
  throw Error(ErrorCode::kUnknownName, "unknown graph '" + std::string(name) + "'");
}

Framework NamedFramework(std::string_view name, const std::vector<std::int64_t>& params,
                         std::string_view variant) {
  Graph g = NamedGraph(name, params);
  auto no_variant = [&] {
    if (!variant.empty()) {
      throw Error(ErrorCode::kBadParams, std::string(name) + " has no realization variants");
    }
  };
  if (name == "ThreePrism") {
    if (variant == "parallel") {
      return Framework(g, {{0, Exact(0, 0)}, {1, Exact(2, 0)}, {2, Exact(1, 2)},
                           {3, Exact(0, 6)}, {4, Exact(2, 6)}, {5, Exact(1, 4)}});
    }
    if (variant.empty() || variant == "generic") {
      // The connectors 03, 14, 25 are neither concurrent nor parallel.
      return Framework(g, {{0, Exact(0, 0)}, {1, Exact(2, 0)}, {2, Exact(1, 2)},
                           {3, Exact(0, 6)}, {4, Exact(3, 5)}, {5, Exact(1, 4)}});
    }
    throw Error(ErrorCode::kBadParams, "ThreePrism variants are 'generic' and 'parallel'");
  }
  if (name == "CompleteBipartite") {
    no_variant();
    const std::int64_t m = params[0], n = params[1];
    Realization r;
    for (Vertex i = 0; i < m; ++i) {
      // Evenly spaced on the y-axis between -1 and 1.
      Rational y = m == 1 ? Rational(0) : Rational(-1) + Frac(2 * i, m - 1);
      r[i] = {Scalar(Rational(0)), Scalar(y)};
    }
    const Rational radius = Frac(77, 25);
    for (Vertex j = 0; j < n; ++j) {
      double angle = 2 * std::numbers::pi * (static_cast<double>(j) + 0.3) / static_cast<double>(n);
      Rational s = Frac(std::lround(std::tan(angle / 2) * 1000), 1000);
      r[m + j] = CirclePoint(radius, s);
    }
    return Framework(g, std::move(r));
  }
  if (name == "Diamond") {
    no_variant();
    return Framework(g, {{0, Exact(0, 0)}, {1, Exact(1, 0)}, {2, Exact(1, 1)}, {3, Exact(0, 1)}});
  }
  if (name == "Cycle" || name == "Complete") {
    no_variant();
    if (params[0] < 3 && name == "Complete") {
      Realization r;
      for (Vertex v = 0; v < params[0]; ++v) r[v] = {Scalar(static_cast<double>(v)), Scalar(0.0)};
      return Framework(g, std::move(r));
    }
    return Framework(g, Polygon(params[0]));
  }
  throw Error(ErrorCode::kUnknownName, "no framework named '" + std::string(name) + "'");
}

}  // namespace rigikit
