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

// Command line front end: analyze, motion, export, db, serve.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rigikit/error.hpp"
#include "rigikit/json_codec.hpp"
#include "rigikit/motion.hpp"
#include "rigikit/service.hpp"
#include "rigikit/tikz.hpp"

using rigikit::Json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rigikit::Error(rigikit::ErrorCode::kSchemaError, "cannot read " + path, "path=" + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts either a framework document or a database entry wrapping one.
rigikit::Json FrameworkDoc(const rigikit::Json& doc) {
  if (doc.is_object() && !doc.contains("realization") && doc.contains("framework") &&
      doc["framework"].is_object()) {
    return doc["framework"];
  }
  return doc;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigikit: rigidity of graphs and frameworks"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Evaluate rigidity properties");
  std::string input;
  bool as_framework = false;
  int dim = 2;
  std::vector<std::string> properties;
  std::string algorithm = "default";
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
  bool numerical = false;
  double tol = rigikit::kDefaultTolerance;
  analyze->add_option("--input", input, "Graph or framework document")->required();
  analyze->add_flag("--framework", as_framework, "Input is a framework document");
  analyze->add_option("--dim", dim, "Dimension for graph properties");
  analyze->add_option("--property", properties, "Property to evaluate (repeatable)")->required();
  analyze->add_option("--algorithm", algorithm, "default, sparsity, randomized or redundancy");
  analyze->add_option("--epsilon", epsilon, "Failure bound for randomized checks");
  analyze->add_option("--seed", seed, "Random seed");
  analyze->add_flag("--numerical", numerical, "Use floating point for framework checks");
  analyze->add_option("--tol", tol, "Numerical tolerance");

  // motion
  auto* motion = app.add_subcommand("motion", "Track an approximate motion");
  std::size_t steps = 100;
  double step_size = 0.1;
  std::size_t flex = 0;
  std::string fixed_pair;
  std::string svg_out;
  motion->add_option("--input", input, "Framework document")->required();
  motion->add_option("--steps", steps, "Number of steps")->required();
  motion->add_option("--step-size", step_size, "Predictor step size")->required();
  motion->add_option("--flex", flex, "Index of the nontrivial flex to follow");
  motion->add_option("--fixed-pair", fixed_pair, "Pinned vertices as A,B");
  motion->add_option("--svg", svg_out, "Also write an SVG animation to this file");

  // export
  auto* exporter = app.add_subcommand("export", "Export a framework or motion");
  std::string format;
  exporter->add_option("--input", input, "Framework or motion document")->required();
  exporter->add_option("--format", format, "tikz or svg")->required()->check(CLI::IsMember({"tikz", "svg"}));

  // db
  auto* db = app.add_subcommand("db", "Print a database graph and framework");
  std::string name;
  std::string params;
  std::string variant;
  db->add_option("--name", name, "Database name")->required();
  db->add_option("--params", params, "Comma separated integer parameters");
  db->add_option("--variant", variant, "Realization variant");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  int port = 8080;
  double timeout = 30;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--timeout", timeout, "Per-request timeout in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      Json doc = rigikit::ParseJson(ReadFile(input));
      Json req;
      req["properties"] = properties;
      req["algorithm"] = algorithm;
      req["epsilon"] = epsilon;
      req["seed"] = seed;
      if (as_framework) {
        req["framework"] = FrameworkDoc(doc);
        req["numerical"] = numerical;
        req["tol"] = tol;
        std::cout << rigikit::AnalyzeFrameworkRequest(req).dump(2) << "\n";
      } else {
        req["graph"] = doc.contains("graph") ? doc["graph"] : doc;
        req["dim"] = dim;
        std::cout << rigikit::AnalyzeGraphRequest(req).dump(2) << "\n";
      }
    } else if (motion->parsed()) {
      rigikit::Framework f = rigikit::DecodeFramework(FrameworkDoc(rigikit::ParseJson(ReadFile(input))));
      rigikit::TrackingOptions opts;
      opts.steps = steps;
      opts.step_size = step_size;
      opts.chosen_flex = flex;
      if (!fixed_pair.empty()) {
        auto comma = fixed_pair.find(',');
        if (comma == std::string::npos) {
          throw rigikit::Error(rigikit::ErrorCode::kBadParams, "--fixed-pair expects A,B");
        }
        opts.fixed_pair = std::make_pair(std::stoll(fixed_pair.substr(0, comma)),
                                         std::stoll(fixed_pair.substr(comma + 1)));
      }
      rigikit::Motion m = rigikit::TrackMotion(f, opts);
      if (!svg_out.empty()) WriteFile(svg_out, rigikit::AnimateSvg(m));
      std::cout << rigikit::EncodeMotion(m).dump(2) << "\n";
    } else if (exporter->parsed()) {
      Json doc = rigikit::ParseJson(ReadFile(input));
      if (doc.contains("type")) {
        rigikit::Motion m = rigikit::DecodeMotion(doc);
        if (format == "tikz") {
          std::cout << rigikit::ToTikz(rigikit::MotionFramework(m));
        } else {
          std::cout << rigikit::AnimateSvg(m);
        }
      } else {
        rigikit::Framework f = rigikit::DecodeFramework(FrameworkDoc(doc));
        if (format == "tikz") {
          std::cout << rigikit::ToTikz(f);
        } else {
          if (f.dim() > 2) {
            throw rigikit::Error(rigikit::ErrorCode::kUnsupportedDimension, "SVG export supports dimensions 1 and 2");
          }
          std::cout << rigikit::AnimateSvg(f.graph(), {f.realization()});
        }
      }
    } else if (db->parsed()) {
      std::cout << rigikit::DbRequest(name, params, variant).dump(2) << "\n";
    } else if (serve->parsed()) {
      rigikit::Service service({timeout});
      int bound = service.Bind(host, port);
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      std::cerr << "rigikit serving on http://" << host << ":" << bound << "\n";
      return service.Run() ? 0 : 1;
    }
  } catch (const rigikit::Error& e) {
    std::cerr << rigikit::ErrorPayload(e).dump() << "\n";
    return 2;
  }
  return 0;
}
