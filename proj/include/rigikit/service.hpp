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

#ifndef RIGIKIT_SERVICE_HPP_
#define RIGIKIT_SERVICE_HPP_

#include <map>
#include <memory>
#include <string>

#include "rigikit/error.hpp"
#include "rigikit/json_codec.hpp"

namespace rigikit {

inline constexpr const char* kVersion = "0.1.0";

// Request handlers shared by the CLI and the HTTP endpoints. Each takes
// and returns a JSON document and throws rigikit::Error on bad input.

// {graph, dim, properties[], algorithm?, epsilon?, seed?, k?, vertex?}
Json AnalyzeGraphRequest(const Json& request);
// {framework, properties[], numerical?, tol?}; graph properties are
// evaluated on the underlying graph in the framework's dimension.
Json AnalyzeFrameworkRequest(const Json& request);
// {framework, numerical?, tol?} -> {flexes[], stresses[], trivial_dim}
Json FlexesRequest(const Json& request);
// {framework, steps, step_size, chosen_flex?, fixed_pair?, tolerance?} -> {samples[]}
Json MotionRequest(const Json& request);
// Database lookup; params is a comma separated integer list.
Json DbRequest(const std::string& name, const std::string& params, const std::string& variant = "");

Json ErrorPayload(const Error& e);

struct ServiceOptions {
  double timeout_s = 30;
};

struct Response {
  int status = 200;
  Json body;
};

// Stateless HTTP front end. Every request runs on its own worker; if it
// exceeds the timeout the client gets error code "timeout" while the worker
// finishes in the background.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  Response Handle(const std::string& method, const std::string& path, const std::string& body,
                  const std::map<std::string, std::string>& query = {}) const;

  // Binds to host:port (port 0 picks a free port) and returns the port, or
  // -1 on failure.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); blocks.
  bool Run();
  void Stop();

 private:
  ServiceOptions options_;
  struct Server;
  std::unique_ptr<Server> server_;
};

}  // namespace rigikit

#endif  // RIGIKIT_SERVICE_HPP_
