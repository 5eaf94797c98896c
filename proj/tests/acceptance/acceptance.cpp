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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/error.hpp"
#include "rigikit/framework.hpp"
#include "rigikit/generic_rigidity.hpp"
#include "rigikit/json_codec.hpp"
#include "rigikit/motion.hpp"
#include "rigikit/nac.hpp"
#include "rigikit/sparsity.hpp"

namespace {

using namespace rigikit;

// Frozen return distance for the K2,4 run (measured 0.02295 on the first
// verified run).
constexpr double kK24ReturnBound = 0.03;

struct Outcome {
  bool ok = true;
  std::string note;
};

// Collects failed checks; the first few are reported.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome Result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failed check(s): " + notes_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

Graph C4() { return Graph::FromEdges({{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Outcome CycleChain() {
  Checker c;
  Framework f = Framework::FromStrings(C4(), {{0, {"0", "0"}}, {1, {"sqrt(2)", "0"}},
                                              {2, {"1", "1"}}, {3, {"0", "3/4"}}},
                                       Mode::kApprox);
  FloatMatrix r = RigidityMatrixFloat(f);
  ExactMatrix rational(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) rational(i, j) = DoubleToRational(r(i, j));
  }
  c.Expect(oracle::NaiveRank(rational) == 4 && Rank(r) == 4, "rigidity matrix rank 4");
  c.Expect(!IsInfRigid(f), "4-cycle not inf rigid");
  Framework g = f.WithEdge(1, 3);
  c.Expect(IsMinInfRigid(g), "+{1,3} min inf rigid");
  Framework h = g.WithEdge(0, 2);
  c.Expect(IsRedundantlyInfRigid(h), "+{0,2} redundantly inf rigid");
  return c.Result("false / min true / redundant true");
}

Outcome ParallelPrism() {
  Checker c;
  Framework f = NamedFramework("ThreePrism", {}, "parallel");
  c.Expect(f.mode() == Mode::kExact, "exact coordinates");
  c.Expect(!IsInfRigid(f), "not inf rigid");
  auto flexes = InfFlexes(f);
  auto stresses = Stresses(f);
  c.Expect(flexes.size() == 1, "1 nontrivial flex");
  c.Expect(stresses.size() == 1, "1 stress");
  c.Expect(IsPrestressStable(f), "prestress stable");
  c.Expect(IsSecondOrderRigid(f), "second-order rigid");
  return c.Result("flexes=" + std::to_string(flexes.size()) + " stresses=" + std::to_string(stresses.size()));
}

Outcome PrismGraph() {
  Checker c;
  Graph g = NamedGraph("ThreePrism");
  c.Expect(IsMinRigid(g, 2, {Algorithm::kSparsity, 1e-6, 0}).value, "min rigid (sparsity)");
  c.Expect(IsRigid(g, 2, {Algorithm::kRandomized, 1e-6, 2026}).value, "rigid (randomized)");
  c.Expect(!IsGloballyRigid(g, 2).value, "not globally rigid");
  return c.Result("min-rigid, rigid, not globally rigid");
}

Outcome OracleCorpus() {
  Checker c;
  auto corpus = oracle::AllGraphs(1, 6);
  c.Expect(corpus.size() == 208, "208 graphs on <= 6 vertices");
  std::uint64_t seed = 1;
  std::size_t disagreements = 0;
  for (const Graph& g : corpus) {
    c.Expect(IsKLSparse(g, 2, 3) == oracle::SubsetCountSparse(g, 2, 3), "(2,3)-sparse verdict");
    c.Expect(IsKLTight(g, 2, 3) == oracle::SubsetCountTight(g, 2, 3), "(2,3)-tight verdict");
    bool sparse = IsRigid(g, 2, {Algorithm::kSparsity, 1e-6, 0}).value;
    bool randomized = IsRigid(g, 2, {Algorithm::kRandomized, 1e-6, seed++}).value;
    if (sparse != randomized) ++disagreements;
    c.Expect(IsRigid(g, 1).value == IsConnected(g), "dim-1 rigidity = connectivity");
  }
  c.Expect(disagreements == 0, "sparsity vs randomized disagreements");
  return c.Result(std::to_string(corpus.size()) + " graphs, " + std::to_string(disagreements) +
                  " disagreements");
}

std::vector<EdgeSet> Subsets(const EdgeSet& edges) {
  std::vector<Edge> list(edges.begin(), edges.end());
  std::vector<EdgeSet> out;
  for (std::uint32_t mask = 0; mask < (1u << list.size()); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask & (1u << i)) s.insert(list[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Outcome MatroidSuite() {
  Checker c;
  std::size_t sets = 0;
  for (const Graph& g : oracle::AllGraphs(1, 5)) {
    Graph kn = NamedGraph("Complete", {static_cast<std::int64_t>(g.num_vertices())});
    for (const EdgeSet& s : Subsets(g.edges())) {
      ++sets;
      EdgeSet cl = RdClosure(g, s, 2);
      c.Expect(std::includes(cl.begin(), cl.end(), s.begin(), s.end()), "closure extensive");
      c.Expect(RdClosure(kn, cl, 2) == cl, "closure idempotent");
      for (const Edge& e : g.edges()) {
        if (s.count(e)) continue;
        EdgeSet bigger = s;
        bigger.insert(e);
        EdgeSet cl2 = RdClosure(g, bigger, 2);
        c.Expect(std::includes(cl2.begin(), cl2.end(), cl.begin(), cl.end()), "closure monotone");
      }
    }
  }
  Graph k4 = NamedGraph("Complete", {4});
  c.Expect(IsRdCircuit(k4, k4.edges(), 2), "K4 is a circuit");
  Graph k4e = k4.WithoutEdge(0, 1);
  c.Expect(RdClosure(k4e, k4e.edges(), 2) == k4.edges(), "closure(K4 - e) = E(K4)");
  return c.Result(std::to_string(sets) + " edge sets");
}

Outcome Nac() {
  Checker c;
  c.Expect(NacColorings(NamedGraph("Complete", {4})).empty(), "K4 has no NAC-coloring");
  c.Expect(NacColorings(C4()).size() == 3, "C4 has 3 NAC-colorings");
  auto corpus = oracle::GraphsUpToEdges(8);
  for (const Graph& g : corpus) {
    c.Expect(NacColorings(g) == oracle::BruteForceNac(g), "enumeration = brute force");
  }
  return c.Result(std::to_string(corpus.size()) + " graphs with <= 8 edges");
}

Outcome ConeExtension() {
  Checker c;
  std::mt19937_64 rng(20260);
  std::uniform_int_distribution<int> size(3, 6);
  std::vector<Graph> samples;
  while (samples.size() < 20) {
    Graph g = oracle::RandomGraph(size(rng), 0.6, rng);
    if (g.num_vertices() >= 3 && IsRigid(g, 2).value) samples.push_back(g);
  }
  GenericOptions randomized{Algorithm::kRandomized, 1e-6, 0};
  GenericOptions sparse{Algorithm::kSparsity, 1e-6, 0};
  std::size_t extensions = 0;
  for (const Graph& g : samples) {
    ++randomized.seed;
    c.Expect(IsRigid(Cone(g), 3, randomized).value, "cone is 3-rigid");
    std::vector<Vertex> verts = g.VertexList();
    for (const auto& base : Combinations(verts, 2)) {
      ++extensions;
      c.Expect(IsRigid(KExtension(g, 2, 0, {}, {base.begin(), base.end()}), 2, sparse).value,
               "0-extension is 2-rigid");
    }
    for (const Edge& e : g.edges()) {
      for (Vertex w : verts) {
        if (e.Touches(w)) continue;
        ++extensions;
        c.Expect(IsRigid(KExtension(g, 2, 1, {e}, {e.u, e.v, w}), 2, sparse).value,
                 "1-extension is 2-rigid");
      }
    }
  }
  return c.Result("20 graphs, " + std::to_string(extensions) + " extensions");
}

double Distance(const Realization& a, const Realization& b) {
  double s = 0;
  for (const auto& [v, p] : a) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      double d = p[k].approx() - b.at(v)[k].approx();
      s += d * d;
    }
  }
  return std::sqrt(s);
}

double SquaredLength(const Realization& r, const Edge& e) {
  double s = 0;
  for (std::size_t k = 0; k < r.at(e.u).size(); ++k) {
    double d = r.at(e.u)[k].to_double() - r.at(e.v)[k].to_double();
    s += d * d;
  }
  return s;
}

Outcome K24Motion() {
  Checker c;
  Framework f = NamedFramework("CompleteBipartite", {2, 4});
  TrackingOptions opts;
  opts.steps = 348;
  opts.step_size = 0.1;
  opts.chosen_flex = 0;
  opts.fixed_pair = std::make_pair(Vertex{0}, Vertex{1});
  ApproximateMotion m = TrackMotion(f, opts);
  c.Expect(m.samples.size() == 349, "349 samples");
  double worst = 0;
  for (const auto& r : m.samples) {
    for (const Edge& e : f.graph().edges()) {
      worst = std::max(worst, std::abs(SquaredLength(r, e) - SquaredLength(f.realization(), e)));
    }
    c.Expect(r.at(0)[0].approx() == 0 && r.at(0)[1].approx() == 0, "vertex 0 pinned at origin");
    c.Expect(r.at(1)[0].approx() > 0 && std::abs(r.at(1)[1].approx()) <= 1e-12, "vertex 1 on +x axis");
  }
  c.Expect(worst <= 1e-6, "squared edge lengths within 1e-6");
  double back = Distance(m.samples.back(), m.samples.front());
  c.Expect(back <= kK24ReturnBound, "final sample returns within delta");
  char buf[128];
  std::snprintf(buf, sizeof buf, "max length drift %.2e, return distance %.5f (delta %.2f)", worst, back,
                kK24ReturnBound);
  return c.Result(buf);
}

Outcome Rhombus() {
  Checker c;
  Framework square = Framework::FromStrings(
      C4(), {{0, {"0", "0"}}, {1, {"1", "0"}}, {2, {"1", "1"}}, {3, {"0", "1"}}}, Mode::kExact);
  ExpressionTable exprs = {{0, {"0", "0"}}, {1, {"1", "0"}}, {2, {"1+cos(t)", "sin(t)"}}, {3, {"cos(t)", "sin(t)"}}};
  const double pi = std::numbers::pi;
  try {
    ParametricMotion::Create(square, exprs, {0, 2 * pi}, pi / 2);
  } catch (const Error& e) {
    c.Expect(false, std::string("rhombus rejected: ") + e.what());
  }
  exprs[2][1] = "2*sin(t)";
  std::string witness;
  try {
    ParametricMotion::Create(square, exprs, {0, 2 * pi}, pi / 2);
    c.Expect(false, "mutated copy accepted");
  } catch (const Error& e) {
    c.Expect(e.code() == ErrorCode::kNotAMotion, "mutated copy gives NotAMotion");
    witness = e.detail();
    c.Expect(witness.find("t=") != std::string::npos && witness.find("edge=") != std::string::npos,
             "witness present");
  }
  return c.Result("mutation witness " + witness);
}

Outcome RoundTrip() {
  Checker c;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> value(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  int sqrt_docs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::RandomGraph(size(rng), 0.4, rng);
    c.Expect(DecodeGraph(ParseJson(EncodeGraph(g).dump())) == g, "graph round trip");
    bool approx = trial % 2 == 0;
    std::map<Vertex, std::vector<std::string>> coords;
    for (Vertex v : g.vertices()) {
      for (int k = 0; k < 2; ++k) {
        coords[v].push_back(std::to_string(value(rng)) + "/" + std::to_string(den(rng)));
      }
    }
    if (approx) {
      coords.begin()->second[0] = "sqrt(2)";
      ++sqrt_docs;
    }
    Framework f = Framework::FromStrings(g, coords, approx ? Mode::kApprox : Mode::kExact);
    Json doc = EncodeFramework(f);
    Framework back = DecodeFramework(ParseJson(doc.dump()));
    c.Expect(back == f, "framework round trip");
    c.Expect(EncodeFramework(back) == doc, "framework text preserved");
  }
  return c.Result("100 graphs and 100 frameworks, " + std::to_string(sqrt_docs) + " with sqrt(2)");
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"4-cycle chain: flexible, +{1,3} minimally, +{0,2} redundantly inf rigid", 1, CycleChain},
      {"parallel 3-prism: 1 flex, 1 stress, prestress stable, second-order rigid", 1, ParallelPrism},
      {"3-prism graph: min rigid, randomized rigid, not globally rigid", 1, PrismGraph},
      {"oracle corpus: pebble game, randomized rank and dim-1 rigidity", 300, OracleCorpus},
      {"rigidity matroid: closure axioms and K4 circuit", 60, MatroidSuite},
      {"NAC-colorings: K4, C4 and brute force on graphs with <= 8 edges", 60, Nac},
      {"cone and 0-/1-extensions preserve rigidity", 60, ConeExtension},
      {"K2,4 approximate motion: lengths, pinning, return", 30, K24Motion},
      {"rhombus parametric motion and mutated copy", 1, Rhombus},
      {"JSON round trip", 60, RoundTrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& crit = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = crit.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > crit.budget_s) {
      out = {false, "over time budget of " + std::to_string(crit.budget_s) + " s"};
    }
    if (!out.ok) ++failed;
    std::printf("%s [%zu] %s (%.3f s): %s\n", out.ok ? "PASS" : "FAIL", i + 1, crit.name, secs, out.note.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
