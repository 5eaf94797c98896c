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

#include "rigikit/generic_rigidity.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rigikit/error.hpp"
#include "rigikit/framework.hpp"
#include "rigikit/sparsity.hpp"

namespace rigikit {

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kDefault: return "default";
    case Algorithm::kSparsity: return "sparsity";
    case Algorithm::kRandomized: return "randomized";
    case Algorithm::kRedundancy: return "redundancy";
  }
  return "default";
}

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kConnectivity: return "Connectivity";
    case Method::kSparsity: return "Sparsity";
    case Method::kRandomized: return "Randomized";
    case Method::kCombinatorial2D: return "Combinatorial2D";
  }
  return "Connectivity";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kDefault, Algorithm::kSparsity, Algorithm::kRandomized,
                      Algorithm::kRedundancy}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw Error(ErrorCode::kBadParams, "unknown algorithm '" + std::string(name) + "'");
}

namespace {

void CheckDim(int dim) {
  if (dim < 1) throw Error(ErrorCode::kParameterRange, "dimension must be at least 1");
}

void CheckEpsilon(double eps) {
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::kParameterRange, "epsilon must lie in (0, 1)");
}

std::size_t Binomial2(std::size_t n) { return n * (n - 1) / 2; }

// d|V| - C(d+1, 2): the rank of an infinitesimally rigid framework.
std::size_t FullRank(std::size_t n, int dim) {
  std::size_t d = static_cast<std::size_t>(dim);
  return d * n - Binomial2(d + 1);
}

bool IsSmall(const Graph& g, int dim) { return g.num_vertices() <= static_cast<std::size_t>(dim) + 1; }

// Resolves the default algorithm and rejects sparsity outside the plane.
Algorithm Resolve(Algorithm a, int dim) {
  if (a == Algorithm::kSparsity && dim != 2) {
    throw Error(ErrorCode::kAlgorithmDimMismatch, "the sparsity algorithm needs dim = 2",
                "dim=" + std::to_string(dim));
  }
  if (a == Algorithm::kRedundancy) {
    throw Error(ErrorCode::kAlgorithmDimMismatch, "redundancy applies to global rigidity only");
  }
  if (a != Algorithm::kDefault) return a;
  return dim <= 2 ? Algorithm::kSparsity : Algorithm::kRandomized;
}

Method MethodFor(Algorithm a, int dim) {
  if (a == Algorithm::kRandomized) return Method::kRandomized;
  return dim == 1 ? Method::kConnectivity : Method::kSparsity;
}

RigidityVerdict Verdict(bool value, Method method, double eps, std::uint64_t seed) {
  RigidityVerdict v;
  v.value = value;
  v.method = method;
  if (method == Method::kRandomized) {
    v.failure_probability_bound = value ? 0.0 : eps;
    v.seed = seed;
  }
  return v;
}

std::size_t ForestRank(const Graph& g, const EdgeSet& edges) {
  Graph h = Graph::FromSets(g.vertices(), edges);
  return g.num_vertices() - ConnectedComponents(h).size();
}

// Deterministic or randomized rigidity of one graph, with the small-graph
// convention applied first.
bool RigidWith(const Graph& g, int dim, Algorithm a, double eps, std::uint64_t seed) {
  if (IsSmall(g, dim)) return g.IsComplete();
  if (a == Algorithm::kRandomized) {
    return RandomizedRank(g, g.edges(), dim, seed, eps) == FullRank(g.num_vertices(), dim);
  }
  if (dim == 1) return IsConnected(g);
  return SparseRank(g, 2, 3) == FullRank(g.num_vertices(), 2);
}

}  // namespace

std::size_t RandomizedRank(const Graph& g, const EdgeSet& edges, int dim, std::uint64_t seed,
                           double epsilon) {
  CheckDim(dim);
  CheckEpsilon(epsilon);
  if (edges.empty()) return 0;
  Graph h = Graph::FromSets(g.vertices(), edges);
  Framework f(h, RandomRealization(h, dim, epsilon, seed));
  return Rank(RigidityMatrixExact(f));
}

RigidityVerdict IsRigid(const Graph& g, int dim, const GenericOptions& opts) {
  CheckDim(dim);
  Algorithm a = Resolve(opts.algorithm, dim);
  if (a == Algorithm::kRandomized) CheckEpsilon(opts.epsilon);
  return Verdict(RigidWith(g, dim, a, opts.epsilon, opts.seed), MethodFor(a, dim), opts.epsilon,
                 opts.seed);
}

RigidityVerdict IsMinRigid(const Graph& g, int dim, const GenericOptions& opts) {
  CheckDim(dim);
  Algorithm a = Resolve(opts.algorithm, dim);
  Method method = MethodFor(a, dim);
  bool value;
  if (IsSmall(g, dim)) {
    value = g.IsComplete();
  } else if (a == Algorithm::kRandomized) {
    CheckEpsilon(opts.epsilon);
    // Independent and spanning: every edge deletion drops the rank.
    std::size_t target = FullRank(g.num_vertices(), dim);
    value = g.num_edges() == target &&
            RandomizedRank(g, g.edges(), dim, opts.seed, opts.epsilon) == target;
  } else if (dim == 1) {
    value = IsConnected(g) && g.num_edges() + 1 == g.num_vertices();
  } else {
    value = IsKLTight(g, 2, 3);
  }
  return Verdict(value, method, opts.epsilon, opts.seed);
}

RigidityVerdict IsKRedundantlyRigid(const Graph& g, int dim, int k, bool vertex,
                                    const GenericOptions& opts) {
  CheckDim(dim);
  if (k < 1) throw Error(ErrorCode::kParameterRange, "k must be at least 1");
  Algorithm a = Resolve(opts.algorithm, dim);
  Method method = MethodFor(a, dim);
  if (a == Algorithm::kRandomized) CheckEpsilon(opts.epsilon);
  std::size_t ku = static_cast<std::size_t>(k);

  std::vector<Graph> deletions;
  bool value = true;
  if (vertex) {
    std::size_t floor = std::max<std::size_t>(2, static_cast<std::size_t>(dim) + 1);
    if (g.num_vertices() < ku || g.num_vertices() - ku < floor) {
      value = false;
    } else {
      for (const auto& combo : Combinations(g.VertexList(), ku)) {
        deletions.push_back(g.WithoutVertices(VertexSet(combo.begin(), combo.end())));
      }
    }
  } else {
    if (g.num_edges() < ku) {
      value = false;
    } else {
      for (const auto& combo : Combinations(g.EdgeList(), ku)) {
        deletions.push_back(g.WithoutEdges(EdgeSet(combo.begin(), combo.end())));
      }
    }
  }
  // The false-negative budget is split across all rank evaluations.
  double eps = opts.epsilon / static_cast<double>(deletions.size() + 1);
  if (value) value = RigidWith(g, dim, a, eps, opts.seed);
  for (std::size_t i = 0; value && i < deletions.size(); ++i) {
    value = RigidWith(deletions[i], dim, a, eps, opts.seed);
  }
  return Verdict(value, method, opts.epsilon, opts.seed);
}

RigidityVerdict IsGloballyRigid(const Graph& g, int dim, const GenericOptions& opts) {
  CheckDim(dim);
  Algorithm a = opts.algorithm;
  if (a == Algorithm::kSparsity) {
    throw Error(ErrorCode::kAlgorithmDimMismatch, "global rigidity has no sparsity algorithm");
  }
  if (a == Algorithm::kRedundancy && dim != 2) {
    throw Error(ErrorCode::kAlgorithmDimMismatch, "the redundancy algorithm needs dim = 2",
                "dim=" + std::to_string(dim));
  }
  if (a == Algorithm::kDefault) {
    a = dim == 1 ? Algorithm::kDefault : dim == 2 ? Algorithm::kRedundancy : Algorithm::kRandomized;
  }
  if (a == Algorithm::kRandomized) CheckEpsilon(opts.epsilon);

  Method method = a == Algorithm::kRandomized   ? Method::kRandomized
                  : a == Algorithm::kRedundancy ? Method::kCombinatorial2D
                                                : Method::kConnectivity;
  if (IsSmall(g, dim)) return Verdict(g.IsComplete(), method, opts.epsilon, opts.seed);

  if (a == Algorithm::kDefault) {
    return Verdict(IsVertexConnected(g, 2), method, opts.epsilon, opts.seed);
  }
  if (a == Algorithm::kRedundancy) {
    bool value = IsVertexConnected(g, 3) &&
                 IsKRedundantlyRigid(g, 2, 1, false, {Algorithm::kSparsity, opts.epsilon, opts.seed})
                     .value;
    return Verdict(value, method, opts.epsilon, opts.seed);
  }

  // Stress-matrix test: a random equilibrium stress at a random realization.
  double eps = opts.epsilon / 3;
  if (!RigidWith(g, dim, Algorithm::kRandomized, eps, opts.seed)) {
    return Verdict(false, method, opts.epsilon, opts.seed);
  }
  Framework f(g, RandomRealization(g, dim, eps, opts.seed));
  auto basis = Stresses(f);
  if (basis.empty()) return Verdict(false, method, opts.epsilon, opts.seed);
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  std::int64_t bound = RandomCoordinateBound(static_cast<std::size_t>(dim), g.num_vertices(), eps);
  std::uniform_int_distribution<std::int64_t> coef(-bound, bound);
  Stress w;
  for (const Edge& e : g.edges()) w[e] = Scalar(Rational(0));
  for (const auto& b : basis) {
    Rational c(static_cast<long>(coef(rng)));
    for (const auto& [e, x] : b) w[e] = Scalar(w[e].exact() + c * x.exact());
  }
  std::size_t rank = Rank(ToExactMatrix(StressMatrix(g, w)));
  bool value = rank == g.num_vertices() - static_cast<std::size_t>(dim) - 1;
  return Verdict(value, method, opts.epsilon, opts.seed);
}

std::vector<VertexSet> RigidComponents(const Graph& g, int dim, const GenericOptions& opts) {
  CheckDim(dim);
  if (dim == 1) return ConnectedComponents(g);
  if (dim == 2) return PebbleComponents(g, 2, 3);
  CheckEpsilon(opts.epsilon);

  // Merge vertex sets while their union induces a rigid subgraph.
  std::vector<VertexSet> sets;
  for (const Edge& e : g.edges()) sets.push_back({e.u, e.v});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sets.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < sets.size() && !changed; ++j) {
        VertexSet u = sets[i];
        u.insert(sets[j].begin(), sets[j].end());
        if (u == sets[i] || u == sets[j] ||
            RigidWith(g.Induced(u), dim, Algorithm::kRandomized, opts.epsilon, opts.seed)) {
          sets[i] = u;
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  VertexSet covered;
  for (const auto& s : sets) covered.insert(s.begin(), s.end());
  for (Vertex v : g.vertices()) {
    if (!covered.count(v)) sets.push_back({v});
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

// --- rigidity matroid ------------------------------------------------------

namespace {

void CheckEdges(const Graph& g, const EdgeSet& edges) {
  for (const Edge& e : edges) {
    if (!g.edges().count(e)) {
      throw Error(ErrorCode::kUnknownEdge,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not in the graph");
    }
  }
}

std::size_t RankOf(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  if (dim == 1) return ForestRank(g, edges);
  if (dim == 2) return SparseRank(Graph::FromSets(g.vertices(), edges), 2, 3);
  return RandomizedRank(g, edges, dim, opts.seed, opts.epsilon);
}

}  // namespace

std::size_t RdRank(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  CheckDim(dim);
  CheckEdges(g, edges);
  return RankOf(g, edges, dim, opts);
}

bool IsRdIndependent(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  return RdRank(g, edges, dim, opts) == edges.size();
}

bool IsRdCircuit(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  if (edges.empty() || IsRdIndependent(g, edges, dim, opts)) return false;
  for (const Edge& e : edges) {
    EdgeSet rest = edges;
    rest.erase(e);
    if (RankOf(g, rest, dim, opts) != rest.size()) return false;
  }
  return true;
}

EdgeSet RdClosure(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  std::size_t rank = RdRank(g, edges, dim, opts);
  EdgeSet closure = edges;
  auto vs = g.VertexList();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Edge e(vs[i], vs[j]);
      if (edges.count(e)) continue;
      EdgeSet plus = edges;
      plus.insert(e);
      if (RankOf(g, plus, dim, opts) == rank) closure.insert(e);
    }
  }
  return closure;
}

bool IsRdClosed(const Graph& g, const EdgeSet& edges, int dim, const GenericOptions& opts) {
  return RdClosure(g, edges, dim, opts) == edges;
}

}  // namespace rigikit
