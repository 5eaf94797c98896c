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

#ifndef RIGIKIT_FRAMEWORK_HPP_
#define RIGIKIT_FRAMEWORK_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rigikit/expression.hpp"
#include "rigikit/graph.hpp"
#include "rigikit/matrix.hpp"
#include "rigikit/scalar.hpp"

namespace rigikit {

using Point = std::vector<Scalar>;
using Realization = std::map<Vertex, Point>;
// Infinitesimal flex: one velocity vector per vertex.
using Flex = std::map<Vertex, std::vector<Scalar>>;
// Equilibrium stress: one weight per edge.
using Stress = std::map<Edge, Scalar>;

// Numerical switches shared by every framework check. With numerical=true an
// exact framework is converted to floating point before the computation.
struct NumericOptions {
  bool numerical = false;
  double tol = kDefaultTolerance;
};

// A graph together with a d-dimensional realization of uniform mode.
class Framework {
 public:
  // Throws MissingVertex when coordinates do not cover exactly V,
  // DimensionMismatch for ragged or empty coordinate vectors and
  // ModeMismatch when exact and approximate coordinates are mixed.
  Framework(Graph graph, Realization realization);

  // Coordinates given as expression strings, evaluated at t = 0 in the
  // requested mode. The strings are kept for lossless serialization.
  static Framework FromStrings(Graph graph,
                               const std::map<Vertex, std::vector<std::string>>& coords,
                               Mode mode);

  const Graph& graph() const { return graph_; }
  const Realization& realization() const { return realization_; }
  int dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const Point& Position(Vertex v) const { return realization_.at(v); }
  // Source strings when built from text, empty otherwise.
  const std::map<Vertex, std::vector<std::string>>& source_text() const { return source_; }

  Framework ToApprox() const;
  Framework WithGraph(Graph graph) const;  // same vertex set required
  Framework WithEdge(Vertex a, Vertex b) const;
  Framework WithoutEdge(Vertex a, Vertex b) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.graph_ == b.graph_ && a.realization_ == b.realization_;
  }

 private:
  Graph graph_;
  Realization realization_;
  std::map<Vertex, std::vector<std::string>> source_;
  int dim_ = 0;
  Mode mode_ = Mode::kExact;
};

// Rows follow sorted edges; columns follow sorted vertices, d per vertex.
// The row of e = {u, v} holds p(u) - p(v) in u's block and p(v) - p(u) in v's.
ExactMatrix RigidityMatrixExact(const Framework& f);
FloatMatrix RigidityMatrixFloat(const Framework& f);
std::variant<ExactMatrix, FloatMatrix> RigidityMatrix(const Framework& f,
                                                      const NumericOptions& opts = {});

// Flatten/unflatten flexes in rigidity-matrix column order.
std::vector<Scalar> FlattenFlex(const Framework& f, const Flex& q);
Flex UnflattenFlex(const Framework& f, const std::vector<Scalar>& values);

std::vector<Flex> TrivialFlexBasis(const Framework& f, const NumericOptions& opts = {});
std::vector<Flex> InfFlexes(const Framework& f, bool include_trivial = false,
                            const NumericOptions& opts = {});
std::vector<Stress> Stresses(const Framework& f, const NumericOptions& opts = {});

bool IsInfFlex(const Framework& f, const Flex& q, const NumericOptions& opts = {});
bool IsNontrivialFlex(const Framework& f, const Flex& q, const NumericOptions& opts = {});
bool IsStress(const Framework& f, const Stress& w, const NumericOptions& opts = {});

bool IsInfRigid(const Framework& f, const NumericOptions& opts = {});
bool IsMinInfRigid(const Framework& f, const NumericOptions& opts = {});
bool IsRedundantlyInfRigid(const Framework& f, const NumericOptions& opts = {});

// Squared-distance comparisons; exact unless numerical or either side is
// approximate. Throws GraphMismatch / DimensionMismatch.
bool IsEquivalent(const Framework& a, const Framework& b, const NumericOptions& opts = {});
bool IsCongruent(const Framework& a, const Framework& b, const NumericOptions& opts = {});

struct Translate { std::vector<Scalar> vector; };
struct Rotate2D { double angle = 0; };              // approximate only
struct Rotate2DExact { Rational cos, sin; };        // needs cos^2 + sin^2 = 1
struct Rotate3D { std::vector<double> axis; double angle = 0; };
struct Rescale { Scalar factor; };
struct Project { Matrix<Scalar> matrix; };          // rows < d, cols = d
using Transformation = std::variant<Translate, Rotate2D, Rotate2DExact, Rotate3D, Rescale, Project>;

Framework Transform(const Framework& f, const Transformation& t);

// Integer coordinates uniform in [-N, N] with N = ceil(2 d |V| / eps).
std::int64_t RandomCoordinateBound(std::size_t dim, std::size_t num_vertices, double eps);
Realization RandomRealization(const Graph& g, int dim, double eps, std::uint64_t seed);

// n x n matrix over sorted vertices: -w(uv) off the diagonal for edges,
// row sums zero. Satisfies q^T (S (x) I_d) q = sum_uv w(uv) |q_u - q_v|^2.
Matrix<Scalar> StressMatrix(const Graph& g, const Stress& w);
ExactMatrix ToExactMatrix(const Matrix<Scalar>& m);
FloatMatrix ToFloatMatrix(const Matrix<Scalar>& m);

// sum over edges of w(uv) (q_u - q_v).(r_u - r_v).
Scalar StressEnergy(const Framework& f, const Stress& w, const Flex& q, const Flex& r);

// Supported when the nontrivial flex space or the stress space has
// dimension 1 (or the framework is infinitesimally rigid, which returns
// true). Otherwise throws UnsupportedCase.
bool IsPrestressStable(const Framework& f, const NumericOptions& opts = {});
bool IsSecondOrderRigid(const Framework& f, const NumericOptions& opts = {});

}  // namespace rigikit

#endif  // RIGIKIT_FRAMEWORK_HPP_
