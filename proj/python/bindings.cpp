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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "rigikit/constructions.hpp"
#include "rigikit/error.hpp"
#include "rigikit/generic_rigidity.hpp"
#include "rigikit/json_codec.hpp"
#include "rigikit/nac.hpp"
#include "rigikit/service.hpp"
#include "rigikit/sparsity.hpp"

namespace py = pybind11;

namespace {

using rigikit::Graph;
using rigikit::Vertex;

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

EdgePairs ToPairs(const rigikit::EdgeSet& edges) {
  EdgePairs out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

rigikit::EdgeSet ToEdgeSet(const EdgePairs& pairs) {
  rigikit::EdgeSet out;
  for (auto [a, b] : pairs) out.insert(rigikit::Edge(a, b));
  return out;
}

rigikit::GenericOptions Options(const std::string& algorithm, double epsilon, std::uint64_t seed) {
  return {rigikit::ParseAlgorithm(algorithm), epsilon, seed};
}

py::dict Verdict(const rigikit::RigidityVerdict& v) {
  py::dict d;
  d["value"] = v.value;
  d["method"] = std::string(rigikit::MethodName(v.method));
  d["failure_probability_bound"] = v.failure_probability_bound;
  d["seed"] = v.seed ? py::cast(*v.seed) : py::none();
  return d;
}

// JSON crosses the boundary as text; the Python package wraps these with
// json.dumps/json.loads.
using JsonHandler = rigikit::Json (*)(const rigikit::Json&);

std::string CallJson(JsonHandler handler, const std::string& request) {
  rigikit::Json out;
  {
    py::gil_scoped_release release;
    out = handler(rigikit::ParseJson(request));
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rigikit core bindings";
  m.attr("__version__") = rigikit::kVersion;

  static py::exception<rigikit::Error> error(m, "RigikitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const rigikit::Error& e) {
      py::tuple args = py::make_tuple(e.code_name(), std::string(e.what()), e.detail());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const EdgePairs& edges, const std::vector<Vertex>& vertices) {
             if (vertices.empty()) return Graph::FromEdges(edges);
             return Graph::FromVerticesAndEdges(vertices, edges);
           }),
           py::arg("edges") = EdgePairs{}, py::arg("vertices") = std::vector<Vertex>{})
      .def_property_readonly("vertices", &Graph::VertexList)
      .def_property_readonly("edges", [](const Graph& g) { return ToPairs(g.edges()); })
      .def("num_vertices", &Graph::num_vertices)
      .def("num_edges", &Graph::num_edges)
      .def("has_edge", &Graph::HasEdge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.num_vertices()) + " vertices, " +
               std::to_string(g.num_edges()) + " edges)";
      });

  m.def("named_graph", &rigikit::NamedGraph, py::arg("name"), py::arg("params") = std::vector<std::int64_t>{});
  m.def("cone", &rigikit::Cone, py::arg("graph"), py::arg("apex") = py::none());
  m.def(
      "k_extension",
      [](const Graph& g, int d, int k, const EdgePairs& removed, const rigikit::VertexSet& base,
         std::optional<Vertex> new_vertex) { return rigikit::KExtension(g, d, k, ToEdgeSet(removed), base, new_vertex); },
      py::arg("graph"), py::arg("d"), py::arg("k"), py::arg("removed"), py::arg("base"),
      py::arg("new_vertex") = py::none());

  m.def("is_kl_sparse", &rigikit::IsKLSparse, py::arg("graph"), py::arg("k"), py::arg("l"));
  m.def("is_kl_tight", &rigikit::IsKLTight, py::arg("graph"), py::arg("k"), py::arg("l"));
  m.def("pebble_components", &rigikit::PebbleComponents, py::arg("graph"), py::arg("k"), py::arg("l"));

  m.def(
      "is_rigid",
      [](const Graph& g, int dim, const std::string& algorithm, double epsilon, std::uint64_t seed) {
        return Verdict(rigikit::IsRigid(g, dim, Options(algorithm, epsilon, seed)));
      },
      py::arg("graph"), py::arg("dim"), py::arg("algorithm") = "default", py::arg("epsilon") = 1e-6,
      py::arg("seed") = 0);
  m.def(
      "is_min_rigid",
      [](const Graph& g, int dim, const std::string& algorithm, double epsilon, std::uint64_t seed) {
        return Verdict(rigikit::IsMinRigid(g, dim, Options(algorithm, epsilon, seed)));
      },
      py::arg("graph"), py::arg("dim"), py::arg("algorithm") = "default", py::arg("epsilon") = 1e-6,
      py::arg("seed") = 0);
  m.def(
      "is_globally_rigid",
      [](const Graph& g, int dim, const std::string& algorithm, double epsilon, std::uint64_t seed) {
        return Verdict(rigikit::IsGloballyRigid(g, dim, Options(algorithm, epsilon, seed)));
      },
      py::arg("graph"), py::arg("dim"), py::arg("algorithm") = "default", py::arg("epsilon") = 1e-6,
      py::arg("seed") = 0);
  m.def(
      "rigid_components",
      [](const Graph& g, int dim, double epsilon, std::uint64_t seed) {
        return rigikit::RigidComponents(g, dim, {rigikit::Algorithm::kDefault, epsilon, seed});
      },
      py::arg("graph"), py::arg("dim"), py::arg("epsilon") = 1e-6, py::arg("seed") = 0);
  m.def(
      "rd_closure",
      [](const Graph& g, const EdgePairs& edges, int dim) {
        return ToPairs(rigikit::RdClosure(g, ToEdgeSet(edges), dim));
      },
      py::arg("graph"), py::arg("edges"), py::arg("dim"));

  m.def(
      "nac_colorings",
      [](const Graph& g, std::optional<std::size_t> limit) {
        std::vector<std::pair<EdgePairs, EdgePairs>> out;
        for (const auto& c : rigikit::NacColorings(g, limit)) out.emplace_back(ToPairs(c.red), ToPairs(c.blue));
        return out;
      },
      py::arg("graph"), py::arg("limit") = py::none());

  m.def("_analyze_graph", [](const std::string& r) { return CallJson(rigikit::AnalyzeGraphRequest, r); });
  m.def("_analyze_framework", [](const std::string& r) { return CallJson(rigikit::AnalyzeFrameworkRequest, r); });
  m.def("_flexes", [](const std::string& r) { return CallJson(rigikit::FlexesRequest, r); });
  m.def("_motion", [](const std::string& r) { return CallJson(rigikit::MotionRequest, r); });
  m.def("_db", [](const std::string& name, const std::string& params, const std::string& variant) {
    return rigikit::DbRequest(name, params, variant).dump();
  });
}
