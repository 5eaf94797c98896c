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

#include "rigikit/service.hpp"

#include <httplib.h>

#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include "rigikit/constructions.hpp"
#include "rigikit/framework.hpp"
#include "rigikit/generic_rigidity.hpp"
#include "rigikit/motion.hpp"
#include "rigikit/nac.hpp"

namespace rigikit {

namespace {

[[noreturn]] void Schema(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::kSchemaError, path + ": " + reason, "path=" + path + ";reason=" + reason);
}

const Json& Require(const Json& req, const char* key) {
  if (!req.is_object()) Schema("/", "expected an object");
  if (!req.contains(key)) Schema(std::string("/") + key, "missing field");
  return req[key];
}

template <typename T>
T Optional(const Json& req, const char* key, T fallback) {
  if (!req.contains(key) || req[key].is_null()) return fallback;
  try {
    return req[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    Schema(std::string("/") + key, "wrong type");
  }
}

std::vector<std::string> Properties(const Json& req) {
  const Json& props = Require(req, "properties");
  if (!props.is_array()) Schema("/properties", "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& p : props) {
    if (!p.is_string()) Schema("/properties", "expected an array of strings");
    out.push_back(p.get<std::string>());
  }
  return out;
}

GenericOptions GenericFrom(const Json& req) {
  GenericOptions opts;
  opts.algorithm = ParseAlgorithm(Optional<std::string>(req, "algorithm", "default"));
  opts.epsilon = Optional<double>(req, "epsilon", opts.epsilon);
  opts.seed = Optional<std::uint64_t>(req, "seed", opts.seed);
  return opts;
}

NumericOptions NumericFrom(const Json& req) {
  NumericOptions opts;
  opts.numerical = Optional<bool>(req, "numerical", false);
  opts.tol = Optional<double>(req, "tol", opts.tol);
  return opts;
}

Json ComponentsJson(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(EncodeVertexSet(s));
  return out;
}

// Returns false when the property is not a graph property.
bool GraphProperty(const Graph& g, int dim, const std::string& prop, const Json& req, Json& results) {
  GenericOptions opts = GenericFrom(req);
  if (prop == "rigid") {
    results[prop] = EncodeVerdict(IsRigid(g, dim, opts));
  } else if (prop == "min-rigid") {
    results[prop] = EncodeVerdict(IsMinRigid(g, dim, opts));
  } else if (prop == "globally-rigid") {
    results[prop] = EncodeVerdict(IsGloballyRigid(g, dim, opts));
  } else if (prop == "redundantly-rigid") {
    int k = Optional<int>(req, "k", 1);
    bool vertex = Optional<bool>(req, "vertex", false);
    results[prop] = EncodeVerdict(IsKRedundantlyRigid(g, dim, k, vertex, opts));
  } else if (prop == "components") {
    results[prop] = ComponentsJson(RigidComponents(g, dim, opts));
  } else if (prop == "nac") {
    Json list = Json::array();
    for (const auto& c : NacColorings(g)) list.push_back(EncodeNacColoring(c));
    results[prop] = list;
  } else if (prop == "monochromatic-classes") {
    Json list = Json::array();
    for (const auto& cls : MonochromaticClasses(g)) {
      Json edges = Json::array();
      for (const Edge& e : cls) edges.push_back({e.u, e.v});
      list.push_back(edges);
    }
    results[prop] = list;
  } else if (prop == "stable-separating-set") {
    auto s = StableSeparatingSet(g);
    results[prop] = s ? EncodeVertexSet(*s) : Json(nullptr);
  } else {
    return false;
  }
  return true;
}

[[noreturn]] void UnknownProperty(const std::string& prop) {
  throw Error(ErrorCode::kBadParams, "unknown property '" + prop + "'");
}

std::vector<std::int64_t> ParseParams(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadParams, "params must be a comma separated list of integers",
                  "value=" + item);
    }
  }
  return out;
}

}  // namespace

Json AnalyzeGraphRequest(const Json& request) {
  Graph g = DecodeGraph(Require(request, "graph"), "/graph");
  const Json& dim = Require(request, "dim");
  if (!dim.is_number_integer()) Schema("/dim", "expected an integer");
  Json results = Json::object();
  for (const auto& prop : Properties(request)) {
    if (!GraphProperty(g, dim.get<int>(), prop, request, results)) UnknownProperty(prop);
  }
  return Json{{"results", results}};
}

Json AnalyzeFrameworkRequest(const Json& request) {
  Framework f = DecodeFramework(Require(request, "framework"), "/framework");
  NumericOptions opts = NumericFrom(request);
  Json results = Json::object();
  for (const auto& prop : Properties(request)) {
    if (prop == "inf-rigid") {
      results[prop] = IsInfRigid(f, opts);
    } else if (prop == "min-inf-rigid") {
      results[prop] = IsMinInfRigid(f, opts);
    } else if (prop == "redundantly-inf-rigid") {
      results[prop] = IsRedundantlyInfRigid(f, opts);
    } else if (prop == "flexes") {
      Json list = Json::array();
      for (const auto& q : InfFlexes(f, false, opts)) list.push_back(EncodeFlex(q));
      results[prop] = list;
    } else if (prop == "stresses") {
      Json list = Json::array();
      for (const auto& w : Stresses(f, opts)) list.push_back(EncodeStress(w));
      results[prop] = list;
    } else if (prop == "prestress-stable") {
      results[prop] = IsPrestressStable(f, opts);
    } else if (prop == "second-order-rigid") {
      results[prop] = IsSecondOrderRigid(f, opts);
    } else if (!GraphProperty(f.graph(), f.dim(), prop, request, results)) {
      UnknownProperty(prop);
    }
  }
  return Json{{"results", results}};
}

Json FlexesRequest(const Json& request) {
  Framework f = DecodeFramework(Require(request, "framework"), "/framework");
  NumericOptions opts = NumericFrom(request);
  Json flexes = Json::array(), stresses = Json::array();
  for (const auto& q : InfFlexes(f, false, opts)) flexes.push_back(EncodeFlex(q));
  for (const auto& w : Stresses(f, opts)) stresses.push_back(EncodeStress(w));
  return Json{{"flexes", flexes},
              {"stresses", stresses},
              {"trivial_dim", TrivialFlexBasis(f, opts).size()}};
}

Json MotionRequest(const Json& request) {
  Framework f = DecodeFramework(Require(request, "framework"), "/framework");
  TrackingOptions opts;
  const Json& steps = Require(request, "steps");
  const Json& step_size = Require(request, "step_size");
  if (!steps.is_number_unsigned()) Schema("/steps", "expected a non-negative integer");
  if (!step_size.is_number()) Schema("/step_size", "expected a number");
  opts.steps = steps.get<std::size_t>();
  opts.step_size = step_size.get<double>();
  opts.chosen_flex = Optional<std::size_t>(request, "chosen_flex", 0);
  opts.tolerance = Optional<double>(request, "tolerance", opts.tolerance);
  if (request.contains("fixed_pair") && !request["fixed_pair"].is_null()) {
    const Json& fp = request["fixed_pair"];
    if (!fp.is_array() || fp.size() != 2 || !fp[0].is_number_integer() || !fp[1].is_number_integer()) {
      Schema("/fixed_pair", "expected [a, b]");
    }
    opts.fixed_pair = std::make_pair(fp[0].get<Vertex>(), fp[1].get<Vertex>());
  }
  ApproximateMotion m = TrackMotion(f, opts);
  Json samples = Json::array();
  for (const auto& r : m.samples) samples.push_back(EncodeRealization(r));
  return Json{{"samples", samples}};
}

Json DbRequest(const std::string& name, const std::string& params, const std::string& variant) {
  auto values = ParseParams(params);
  Json out;
  out["name"] = name;
  out["graph"] = EncodeGraph(NamedGraph(name, values));
  try {
    out["framework"] = EncodeFramework(NamedFramework(name, values, variant));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnknownName) throw;
    out["framework"] = nullptr;
  }
  return out;
}

Json ErrorPayload(const Error& e) {
  return Json{{"error", e.code_name()}, {"message", e.what()}, {"detail", e.detail()}};
}

// --- HTTP ------------------------------------------------------------------

struct Service::Server {
  httplib::Server http;
};

Service::Service(ServiceOptions options) : options_(options), server_(std::make_unique<Server>()) {
  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query[k] = v;
    Response r = Handle(req.method, req.path, req.body, query);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server_->http.Get(".*", bridge);
  server_->http.Post(".*", bridge);
}

Service::~Service() { Stop(); }

namespace {

Response Dispatch(const std::string& method, const std::string& path, const std::string& body,
                  const std::map<std::string, std::string>& query) {
  auto param = [&](const char* key) {
    auto it = query.find(key);
    return it == query.end() ? std::string() : it->second;
  };
  using Handler = Json (*)(const Json&);
  static const std::map<std::string, Handler> posts = {
      {"/api/graph/analyze", AnalyzeGraphRequest},
      {"/api/framework/analyze", AnalyzeFrameworkRequest},
      {"/api/framework/flexes", FlexesRequest},
      {"/api/motion/approximate", MotionRequest},
  };
  if (path == "/api/health" || path == "/api/db") {
    if (method != "GET") return {405, Json{{"error", "MethodNotAllowed"}, {"message", "use GET"}, {"detail", ""}}};
    if (path == "/api/health") return {200, Json{{"status", "ok"}, {"version", kVersion}}};
    return {200, DbRequest(param("name"), param("params"), param("variant"))};
  }
  auto it = posts.find(path);
  if (it == posts.end()) {
    return {404, Json{{"error", "NotFound"}, {"message", "no endpoint " + path}, {"detail", ""}}};
  }
  if (method != "POST") return {405, Json{{"error", "MethodNotAllowed"}, {"message", "use POST"}, {"detail", ""}}};
  return {200, it->second(ParseJson(body))};
}

}  // namespace

Response Service::Handle(const std::string& method, const std::string& path, const std::string& body,
                         const std::map<std::string, std::string>& query) const {
  auto promise = std::make_shared<std::promise<Response>>();
  std::future<Response> result = promise->get_future();
  std::thread([promise, method, path, body, query] {
    try {
      promise->set_value(Dispatch(method, path, body, query));
    } catch (const Error& e) {
      promise->set_value({400, ErrorPayload(e)});
    } catch (const std::exception& e) {
      promise->set_value({500, Json{{"error", "internal"}, {"message", e.what()}, {"detail", ""}}});
    }
  }).detach();
  auto limit = std::chrono::duration<double>(options_.timeout_s);
  if (result.wait_for(limit) != std::future_status::ready) {
    Error e(ErrorCode::kTimeout, "request exceeded the server timeout",
            "timeout_s=" + DoubleToString(options_.timeout_s));
    return {504, ErrorPayload(e)};
  }
  return result.get();
}

int Service::Bind(const std::string& host, int port) {
  if (port == 0) return server_->http.bind_to_any_port(host);
  return server_->http.bind_to_port(host, port) ? port : -1;
}

bool Service::Run() { return server_->http.listen_after_bind(); }

void Service::Stop() {
  if (server_) server_->http.stop();
}

}  // namespace rigikit
