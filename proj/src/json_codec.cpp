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

#include "rigikit/json_codec.hpp"

#include <cmath>
#include <limits>

#include "rigikit/error.hpp"

namespace rigikit {

namespace {

[[noreturn]] void Schema(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::kSchemaError, (path.empty() ? "/" : path) + ": " + reason,
              "path=" + (path.empty() ? "/" : path) + ";reason=" + reason);
}

const Json& Field(const Json& doc, const std::string& path, const char* key) {
  if (!doc.is_object()) Schema(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) Schema(path + "/" + key, "missing field");
  return *it;
}

Vertex VertexLabel(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) Schema(path, "expected a non-negative integer");
  return j.get<Vertex>();
}

Vertex VertexKey(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    Schema(path, "vertex key is not an integer");
  }
  if (used != key.size() || v < 0 || std::to_string(v) != key) Schema(path, "vertex key is not an integer");
  return v;
}

double NumberOrInfinity(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    if (j == "inf" || j == "+inf") return std::numeric_limits<double>::infinity();
    if (j == "-inf") return -std::numeric_limits<double>::infinity();
  }
  Schema(path, "expected a number, \"inf\" or \"-inf\"");
}

Json InfinityOrNumber(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  return Json(x);
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Schema("", std::string("invalid JSON: ") + e.what());
  }
}

std::string ScalarText(const Scalar& s) {
  return s.is_exact() ? RationalToString(s.exact()) : DoubleToString(s.approx());
}

Json EncodeGraph(const Graph& g) {
  Json doc;
  doc["vertices"] = g.VertexList();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = edges;
  return doc;
}

Graph DecodeGraph(const Json& doc, const std::string& path) {
  const Json& vs = Field(doc, path, "vertices");
  const Json& es = Field(doc, path, "edges");
  if (!vs.is_array()) Schema(path + "/vertices", "expected an array");
  if (!es.is_array()) Schema(path + "/edges", "expected an array");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(VertexLabel(vs[i], path + "/vertices/" + std::to_string(i)));
  }
  VertexSet known(vertices.begin(), vertices.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = path + "/edges/" + std::to_string(i);
    if (!es[i].is_array() || es[i].size() != 2) Schema(p, "expected a pair of vertices");
    Vertex a = VertexLabel(es[i][0], p + "/0");
    Vertex b = VertexLabel(es[i][1], p + "/1");
    if (a == b) Schema(p, "loop edge");
    if (!known.count(a) || !known.count(b)) Schema(p, "endpoint is not in the vertex list");
    edges.emplace_back(a, b);
  }
  return Graph::FromVerticesAndEdges(vertices, edges);
}

Json EncodeFramework(const Framework& f) {
  Json doc;
  doc["graph"] = EncodeGraph(f.graph());
  Json real = Json::object();
  for (const auto& [v, p] : f.realization()) {
    Json coords = Json::array();
    auto src = f.source_text().find(v);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (src != f.source_text().end() && k < src->second.size()) {
        coords.push_back(src->second[k]);
      } else {
        coords.push_back(ScalarText(p[k]));
      }
    }
    real[std::to_string(v)] = coords;
  }
  doc["realization"] = real;
  doc["mode"] = std::string(ModeName(f.mode()));
  return doc;
}

Framework DecodeFramework(const Json& doc, const std::string& path) {
  Graph g = DecodeGraph(Field(doc, path, "graph"), path + "/graph");
  const Json& real = Field(doc, path, "realization");
  if (!real.is_object()) Schema(path + "/realization", "expected an object");
  Mode mode = Mode::kExact;
  if (doc.contains("mode")) {
    const Json& m = doc["mode"];
    if (m == "exact") {
      mode = Mode::kExact;
    } else if (m == "approx") {
      mode = Mode::kApprox;
    } else {
      Schema(path + "/mode", "expected \"exact\" or \"approx\"");
    }
  }
  std::map<Vertex, std::vector<std::string>> coords;
  for (const auto& [key, value] : real.items()) {
    std::string p = path + "/realization/" + key;
    Vertex v = VertexKey(key, p);
    if (!value.is_array()) Schema(p, "expected an array of expression strings");
    std::vector<std::string> texts;
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k].is_string()) {
        texts.push_back(value[k].get<std::string>());
      } else if (value[k].is_number_integer()) {
        texts.push_back(value[k].dump());
      } else {
        Schema(p + "/" + std::to_string(k), "expected an expression string");
      }
    }
    coords[v] = std::move(texts);
  }
  return Framework::FromStrings(std::move(g), coords, mode);
}

Json EncodeRealization(const Realization& r) {
  Json out = Json::object();
  for (const auto& [v, p] : r) {
    Json coords = Json::array();
    for (const Scalar& s : p) coords.push_back(s.to_double());
    out[std::to_string(v)] = coords;
  }
  return out;
}

namespace {

Realization DecodeSample(const Json& doc, const std::string& path) {
  if (!doc.is_object()) Schema(path, "expected an object");
  Realization r;
  for (const auto& [key, value] : doc.items()) {
    Vertex v = VertexKey(key, path + "/" + key);
    if (!value.is_array()) Schema(path + "/" + key, "expected an array of numbers");
    Point p;
    for (const auto& x : value) {
      if (!x.is_number()) Schema(path + "/" + key, "expected numbers");
      p.push_back(Scalar(x.get<double>()));
    }
    r[v] = std::move(p);
  }
  return r;
}

}  // namespace

Json EncodeMotion(const Motion& m) {
  Json doc;
  if (const auto* p = std::get_if<ParametricMotion>(&m)) {
    doc["type"] = "parametric";
    doc["framework"] = EncodeFramework(p->framework());
    Json exprs = Json::object();
    for (const auto& [v, texts] : p->expressions()) exprs[std::to_string(v)] = texts;
    doc["expressions"] = exprs;
    doc["interval"] = {InfinityOrNumber(p->interval().lo), InfinityOrNumber(p->interval().hi)};
    doc["t0"] = p->t0();
    return doc;
  }
  const auto& a = std::get<ApproximateMotion>(m);
  doc["type"] = "approximate";
  doc["framework"] = EncodeFramework(a.framework);
  doc["steps"] = a.steps;
  doc["chosen_flex"] = a.chosen_flex;
  doc["step_size"] = a.step_size;
  doc["tolerance"] = a.tolerance;
  doc["fixed_pair"] = a.fixed_pair ? Json{a.fixed_pair->first, a.fixed_pair->second} : Json(nullptr);
  Json samples = Json::array();
  for (const auto& r : a.samples) samples.push_back(EncodeRealization(r));
  doc["samples"] = samples;
  return doc;
}

Motion DecodeMotion(const Json& doc, const std::string& path) {
  const Json& type = Field(doc, path, "type");
  Framework f = DecodeFramework(Field(doc, path, "framework"), path + "/framework");
  if (type == "parametric") {
    const Json& exprs = Field(doc, path, "expressions");
    if (!exprs.is_object()) Schema(path + "/expressions", "expected an object");
    ExpressionTable table;
    for (const auto& [key, value] : exprs.items()) {
      std::string p = path + "/expressions/" + key;
      if (!value.is_array()) Schema(p, "expected an array of strings");
      for (const auto& s : value) {
        if (!s.is_string()) Schema(p, "expected an array of strings");
        table[VertexKey(key, p)].push_back(s.get<std::string>());
      }
    }
    const Json& iv = Field(doc, path, "interval");
    if (!iv.is_array() || iv.size() != 2) Schema(path + "/interval", "expected [lo, hi]");
    Interval interval{NumberOrInfinity(iv[0], path + "/interval/0"), NumberOrInfinity(iv[1], path + "/interval/1")};
    const Json& t0 = Field(doc, path, "t0");
    if (!t0.is_number()) Schema(path + "/t0", "expected a number");
    return ParametricMotion::Create(f, table, interval, t0.get<double>());
  }
  if (type != "approximate") Schema(path + "/type", "expected \"parametric\" or \"approximate\"");
  ApproximateMotion a{f, {}, 0, 0, 0, 0, std::nullopt};
  auto number = [&](const char* key) {
    const Json& j = Field(doc, path, key);
    if (!j.is_number()) Schema(path + "/" + key, "expected a number");
    return j;
  };
  a.steps = number("steps").get<std::size_t>();
  a.chosen_flex = number("chosen_flex").get<std::size_t>();
  a.step_size = number("step_size").get<double>();
  a.tolerance = number("tolerance").get<double>();
  if (doc.contains("fixed_pair") && !doc["fixed_pair"].is_null()) {
    const Json& fp = doc["fixed_pair"];
    if (!fp.is_array() || fp.size() != 2) Schema(path + "/fixed_pair", "expected [a, b]");
    a.fixed_pair = std::make_pair(VertexLabel(fp[0], path + "/fixed_pair/0"), VertexLabel(fp[1], path + "/fixed_pair/1"));
  }
  const Json& samples = Field(doc, path, "samples");
  if (!samples.is_array()) Schema(path + "/samples", "expected an array");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    a.samples.push_back(DecodeSample(samples[i], path + "/samples/" + std::to_string(i)));
  }
  return a;
}

Json EncodeFlex(const Flex& q) {
  Json out = Json::object();
  for (const auto& [v, vec] : q) {
    Json coords = Json::array();
    for (const Scalar& s : vec) coords.push_back(ScalarText(s));
    out[std::to_string(v)] = coords;
  }
  return out;
}

Json EncodeStress(const Stress& w) {
  Json out = Json::array();
  for (const auto& [e, s] : w) out.push_back(Json{{"edge", {e.u, e.v}}, {"weight", ScalarText(s)}});
  return out;
}

Json EncodeVerdict(const RigidityVerdict& v) {
  Json out;
  out["value"] = v.value;
  out["method"] = std::string(MethodName(v.method));
  out["failure_probability_bound"] = v.failure_probability_bound;
  out["seed"] = v.seed ? Json(*v.seed) : Json(nullptr);
  return out;
}

Json EncodeNacColoring(const NacColoring& c) {
  Json red = Json::array(), blue = Json::array();
  for (const Edge& e : c.red) red.push_back({e.u, e.v});
  for (const Edge& e : c.blue) blue.push_back({e.u, e.v});
  return Json{{"red", red}, {"blue", blue}};
}

Json EncodeVertexSet(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

}  // namespace rigikit
