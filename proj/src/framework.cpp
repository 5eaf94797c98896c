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

#include "rigikit/framework.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "rigikit/error.hpp"

namespace rigikit {

// --- Framework -------------------------------------------------------------

Framework::Framework(Graph graph, Realization realization)
    : graph_(std::move(graph)), realization_(std::move(realization)) {
  for (Vertex v : graph_.vertices()) {
    if (!realization_.count(v)) {
      throw Error(ErrorCode::kMissingVertex, "no coordinates for vertex " + std::to_string(v));
    }
  }
  for (const auto& [v, p] : realization_) {
    if (!graph_.HasVertex(v)) {
      throw Error(ErrorCode::kMissingVertex,
                  "coordinates given for vertex " + std::to_string(v) + " outside the graph");
    }
  }
  bool first = true;
  for (const auto& [v, p] : realization_) {
    if (p.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty coordinate vector");
    if (first) {
      dim_ = static_cast<int>(p.size());
      mode_ = p.front().mode();
      first = false;
    }
    if (static_cast<int>(p.size()) != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vertex " + std::to_string(v) + " has " + std::to_string(p.size()) +
                      " coordinates, expected " + std::to_string(dim_));
    }
    for (const Scalar& x : p) {
      if (x.mode() != mode_) {
        throw Error(ErrorCode::kModeMismatch, "realization mixes exact and approximate values");
      }
    }
  }
  if (first) dim_ = 0;
}

Framework Framework::FromStrings(Graph graph,
                                 const std::map<Vertex, std::vector<std::string>>& coords,
                                 Mode mode) {
  Realization r;
  for (const auto& [v, texts] : coords) {
    Point p;
    for (const auto& text : texts) p.push_back(Evaluate(ParseExpression(text), mode));
    r[v] = std::move(p);
  }
  Framework f(std::move(graph), std::move(r));
  f.mode_ = mode;
  f.source_ = coords;
  return f;
}

Framework Framework::ToApprox() const {
  Realization r;
  for (const auto& [v, p] : realization_) {
    Point q;
    for (const Scalar& x : p) q.push_back(x.ToApprox());
    r[v] = std::move(q);
  }
  Framework f(graph_, std::move(r));
  f.source_ = source_;
  f.mode_ = Mode::kApprox;
  return f;
}

Framework Framework::WithGraph(Graph graph) const {
  if (graph.vertices() != graph_.vertices()) {
    throw Error(ErrorCode::kGraphMismatch, "replacement graph has a different vertex set");
  }
  Framework f = *this;
  f.graph_ = std::move(graph);
  return f;
}

Framework Framework::WithEdge(Vertex a, Vertex b) const {
  if (!graph_.HasVertex(a) || !graph_.HasVertex(b)) {
    throw Error(ErrorCode::kUnknownVertex, "edge endpoint is not a framework vertex");
  }
  return WithGraph(graph_.WithEdge(a, b));
}

Framework Framework::WithoutEdge(Vertex a, Vertex b) const {
  return WithGraph(graph_.WithoutEdge(a, b));
}

// --- numeric traits --------------------------------------------------------

namespace {

template <typename T>
struct Num;

template <>
struct Num<Rational> {
  static Rational From(const Scalar& s) { return s.exact(); }
  static Scalar To(const Rational& q) { return Scalar(q); }
  static std::size_t RankOf(const ExactMatrix& m, double) { return Rank(m); }
  static std::vector<std::vector<Rational>> KernelOf(const ExactMatrix& m, double) {
    return Kernel(m);
  }
};

template <>
struct Num<double> {
  static double From(const Scalar& s) { return s.to_double(); }
  static Scalar To(double x) { return Scalar(x); }
  static std::size_t RankOf(const FloatMatrix& m, double tol) { return Rank(m, tol); }
  static std::vector<std::vector<double>> KernelOf(const FloatMatrix& m, double tol) {
    return Kernel(m, tol);
  }
};

template <typename T>
using Vec = std::vector<T>;

bool UseExact(const Framework& f, const NumericOptions& opts) {
  return f.mode() == Mode::kExact && !opts.numerical;
}

template <typename T>
std::vector<Vec<T>> Positions(const Framework& f) {
  std::vector<Vec<T>> out;
  for (const auto& [v, p] : f.realization()) {
    Vec<T> x;
    for (const Scalar& s : p) x.push_back(Num<T>::From(s));
    out.push_back(std::move(x));
  }
  return out;
}

std::map<Vertex, std::size_t> VertexIndex(const Graph& g) {
  std::map<Vertex, std::size_t> idx;
  std::size_t i = 0;
  for (Vertex v : g.vertices()) idx[v] = i++;
  return idx;
}

template <typename T>
Matrix<T> RigidityMatrixT(const Framework& f) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  const auto idx = VertexIndex(f.graph());
  const auto pos = Positions<T>(f);
  Matrix<T> r(f.graph().num_edges(), d * f.graph().num_vertices(), T(0));
  std::size_t row = 0;
  for (const Edge& e : f.graph().edges()) {
    std::size_t iu = idx.at(e.u);
    std::size_t iv = idx.at(e.v);
    for (std::size_t k = 0; k < d; ++k) {
      T diff = pos[iu][k] - pos[iv][k];
      r(row, iu * d + k) = diff;
      r(row, iv * d + k) = -diff;
    }
    ++row;
  }
  return r;
}

template <typename T>
Vec<T> Normalized(Vec<T> x) {
  if constexpr (std::is_same_v<T, Rational>) {
    auto first = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
    if (first != x.end()) {
      Rational s = *first;
      for (auto& q : x) q /= s;
    }
  } else {
    double norm = 0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      norm += x[i] * x[i];
      if (std::abs(x[i]) > std::abs(x[arg]) + 1e-12) arg = i;
    }
    norm = std::sqrt(norm);
    if (norm > 0) {
      double s = x[arg] < 0 ? -norm : norm;
      for (auto& xi : x) xi /= s;
    }
  }
  return x;
}

// Keeps the vectors that increase the rank of the running collection.
template <typename T>
std::vector<Vec<T>> RankFilter(const std::vector<Vec<T>>& base, const std::vector<Vec<T>>& candidates,
                               std::size_t cols, double tol) {
  std::vector<Vec<T>> rows = base;
  std::size_t rank = rows.empty() ? 0 : Num<T>::RankOf(FromRows(rows, cols), tol);
  std::vector<Vec<T>> kept;
  for (const auto& c : candidates) {
    rows.push_back(c);
    std::size_t r = Num<T>::RankOf(FromRows(rows, cols), tol);
    if (r > rank) {
      rank = r;
      kept.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  return kept;
}

template <typename T>
std::vector<Vec<T>> TrivialRaw(const Framework& f) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  const auto pos = Positions<T>(f);
  const std::size_t n = pos.size();
  std::vector<Vec<T>> fields;
  for (std::size_t i = 0; i < d; ++i) {
    Vec<T> q(n * d, T(0));
    for (std::size_t v = 0; v < n; ++v) q[v * d + i] = T(1);
    fields.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      // q_v = A p(v) with A = E_ij - E_ji.
      Vec<T> q(n * d, T(0));
      for (std::size_t v = 0; v < n; ++v) {
        q[v * d + i] = pos[v][j];
        q[v * d + j] = -pos[v][i];
      }
      fields.push_back(std::move(q));
    }
  }
  return fields;
}

template <typename T>
std::vector<Vec<T>> TrivialBasisT(const Framework& f, double tol) {
  std::size_t cols = static_cast<std::size_t>(f.dim()) * f.graph().num_vertices();
  if (cols == 0) return {};
  return RankFilter<T>({}, TrivialRaw<T>(f), cols, tol);
}

// Orthonormal basis (as rows) for the span of the given vectors, rank r.
std::vector<Vec<double>> OrthonormalSpan(const std::vector<Vec<double>>& vs, std::size_t cols,
                                         double tol) {
  if (vs.empty()) return {};
  FloatMatrix m = FromRows(vs, cols);
  // Row space = orthogonal complement of the kernel.
  auto kernel = Kernel(m, tol);
  std::size_t rank = cols - kernel.size();
  // Gram-Schmidt on the input in order, keeping `rank` vectors.
  std::vector<Vec<double>> out;
  for (const auto& v : vs) {
    Vec<double> w = v;
    for (const auto& b : out) {
      double dot = 0;
      for (std::size_t i = 0; i < cols; ++i) dot += w[i] * b[i];
      for (std::size_t i = 0; i < cols; ++i) w[i] -= dot * b[i];
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    double vnorm = 0;
    for (double x : v) vnorm += x * x;
    vnorm = std::sqrt(vnorm);
    if (norm > std::sqrt(tol) * std::max(1.0, vnorm) && out.size() < rank) {
      for (auto& x : w) x /= norm;
      out.push_back(std::move(w));
    }
  }
  return out;
}

template <typename T>
std::vector<Vec<T>> NontrivialFlexesT(const Framework& f, double tol) {
  const std::size_t cols = static_cast<std::size_t>(f.dim()) * f.graph().num_vertices();
  if (cols == 0) return {};
  auto kernel = Num<T>::KernelOf(RigidityMatrixT<T>(f), tol);
  auto trivial = TrivialBasisT<T>(f, tol);
  if constexpr (std::is_same_v<T, Rational>) {
    auto kept = RankFilter<T>(trivial, kernel, cols, tol);
    for (auto& q : kept) q = Normalized(q);
    return kept;
  } else {
    std::size_t want = kernel.size() > trivial.size() ? kernel.size() - trivial.size() : 0;
    if (want == 0) return {};
    auto q_basis = OrthonormalSpan(trivial, cols, tol);
    std::vector<Vec<double>> residuals;
    for (const auto& k : kernel) {
      Vec<double> r = k;
      for (const auto& b : q_basis) {
        double dot = 0;
        for (std::size_t i = 0; i < cols; ++i) dot += k[i] * b[i];
        for (std::size_t i = 0; i < cols; ++i) r[i] -= dot * b[i];
      }
      residuals.push_back(std::move(r));
    }
    // The residuals span the orthogonal complement of the trivial space
    // inside the kernel; take its dominant right singular directions.
    Eigen::MatrixXd m(residuals.size(), cols);
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = residuals[i][j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    std::vector<Vec<double>> out;
    for (std::size_t k = 0; k < want; ++k) {
      Vec<double> x(cols);
      for (std::size_t j = 0; j < cols; ++j) x[j] = svd.matrixV()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      out.push_back(Normalized(x));
    }
    return out;
  }
}

template <typename T>
std::vector<Vec<T>> StressesT(const Framework& f, double tol) {
  if (f.graph().num_edges() == 0) return {};
  auto rt = RigidityMatrixT<T>(f).Transposed();
  if (rt.rows() == 0) {
    // No columns: every edge weight is an equilibrium stress.
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < f.graph().num_edges(); ++i) {
      Vec<T> e(f.graph().num_edges(), T(0));
      e[i] = T(1);
      out.push_back(std::move(e));
    }
    return out;
  }
  auto basis = Num<T>::KernelOf(rt, tol);
  for (auto& w : basis) w = Normalized(w);
  return basis;
}

template <typename T>
Flex ToFlex(const Framework& f, const Vec<T>& x) {
  Flex q;
  const std::size_t d = static_cast<std::size_t>(f.dim());
  std::size_t i = 0;
  for (Vertex v : f.graph().vertices()) {
    std::vector<Scalar> vec;
    for (std::size_t k = 0; k < d; ++k) vec.push_back(Num<T>::To(x[i * d + k]));
    q[v] = std::move(vec);
    ++i;
  }
  return q;
}

template <typename T>
Stress ToStress(const Framework& f, const Vec<T>& x) {
  Stress w;
  std::size_t i = 0;
  for (const Edge& e : f.graph().edges()) w[e] = Num<T>::To(x[i++]);
  return w;
}

void CheckFlexShape(const Framework& f, const Flex& q) {
  if (q.size() != f.graph().num_vertices()) {
    throw Error(ErrorCode::kShapeMismatch, "flex must have one vector per vertex");
  }
  for (const auto& [v, vec] : q) {
    if (!f.graph().HasVertex(v) || static_cast<int>(vec.size()) != f.dim()) {
      throw Error(ErrorCode::kShapeMismatch, "flex vector shape does not match the framework");
    }
  }
}

void CheckStressShape(const Framework& f, const Stress& w) {
  if (w.size() != f.graph().num_edges()) {
    throw Error(ErrorCode::kShapeMismatch, "stress must have one weight per edge");
  }
  for (const auto& [e, x] : w) {
    if (!f.graph().edges().count(e)) {
      throw Error(ErrorCode::kShapeMismatch, "stress keyed by a non-edge");
    }
  }
}

template <typename T>
Vec<T> FlexValues(const Framework& f, const Flex& q) {
  Vec<T> x;
  for (const auto& [v, vec] : q) {
    for (const Scalar& s : vec) x.push_back(Num<T>::From(s));
  }
  (void)f;
  return x;
}

bool AllExact(const Flex& q) {
  for (const auto& [v, vec] : q) {
    for (const Scalar& s : vec) {
      if (!s.is_exact()) return false;
    }
  }
  return true;
}

bool AllExact(const Stress& w) {
  for (const auto& [e, s] : w) {
    if (!s.is_exact()) return false;
  }
  return true;
}

template <typename T>
bool IsInfRigidT(const Framework& f, double tol) {
  std::size_t cols = static_cast<std::size_t>(f.dim()) * f.graph().num_vertices();
  if (cols == 0) return true;
  std::size_t rank = f.graph().num_edges() == 0 ? 0 : Num<T>::RankOf(RigidityMatrixT<T>(f), tol);
  return cols - rank == TrivialBasisT<T>(f, tol).size();
}

template <typename T>
std::vector<T> SquaredLengths(const Framework& f, bool all_pairs) {
  auto pos = Positions<T>(f);
  auto idx = VertexIndex(f.graph());
  auto sq = [&](Vertex a, Vertex b) {
    T s(0);
    const auto& pa = pos[idx.at(a)];
    const auto& pb = pos[idx.at(b)];
    for (std::size_t k = 0; k < pa.size(); ++k) s += (pa[k] - pb[k]) * (pa[k] - pb[k]);
    return s;
  };
  std::vector<T> out;
  if (all_pairs) {
    auto vs = f.graph().VertexList();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back(sq(vs[i], vs[j]));
    }
  } else {
    for (const Edge& e : f.graph().edges()) out.push_back(sq(e.u, e.v));
  }
  return out;
}

bool CompareLengths(const Framework& a, const Framework& b, bool all_pairs,
                    const NumericOptions& opts) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "frameworks differ in dimension");
  bool exact = a.mode() == Mode::kExact && b.mode() == Mode::kExact && !opts.numerical;
  if (exact) return SquaredLengths<Rational>(a, all_pairs) == SquaredLengths<Rational>(b, all_pairs);
  auto la = SquaredLengths<double>(a, all_pairs);
  auto lb = SquaredLengths<double>(b, all_pairs);
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (std::abs(la[i] - lb[i]) > opts.tol) return false;
  }
  return true;
}

}  // namespace

// --- rigidity matrix, flexes, stresses -------------------------------------

ExactMatrix RigidityMatrixExact(const Framework& f) {
  if (f.mode() != Mode::kExact) {
    throw Error(ErrorCode::kModeMismatch, "exact rigidity matrix needs an exact framework");
  }
  return RigidityMatrixT<Rational>(f);
}

FloatMatrix RigidityMatrixFloat(const Framework& f) { return RigidityMatrixT<double>(f); }

std::variant<ExactMatrix, FloatMatrix> RigidityMatrix(const Framework& f, const NumericOptions& opts) {
  if (UseExact(f, opts)) return RigidityMatrixT<Rational>(f);
  return RigidityMatrixT<double>(f);
}

std::vector<Scalar> FlattenFlex(const Framework& f, const Flex& q) {
  CheckFlexShape(f, q);
  std::vector<Scalar> out;
  for (const auto& [v, vec] : q) out.insert(out.end(), vec.begin(), vec.end());
  return out;
}

Flex UnflattenFlex(const Framework& f, const std::vector<Scalar>& values) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  if (values.size() != d * f.graph().num_vertices()) {
    throw Error(ErrorCode::kShapeMismatch, "flat flex has the wrong length");
  }
  Flex q;
  std::size_t i = 0;
  for (Vertex v : f.graph().vertices()) {
    q[v] = std::vector<Scalar>(values.begin() + static_cast<std::ptrdiff_t>(i * d),
                               values.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    ++i;
  }
  return q;
}

std::vector<Flex> TrivialFlexBasis(const Framework& f, const NumericOptions& opts) {
  std::vector<Flex> out;
  if (UseExact(f, opts)) {
    for (const auto& x : TrivialBasisT<Rational>(f, opts.tol)) out.push_back(ToFlex(f, Normalized(x)));
  } else {
    for (const auto& x : TrivialBasisT<double>(f, opts.tol)) out.push_back(ToFlex(f, Normalized(x)));
  }
  return out;
}

std::vector<Flex> InfFlexes(const Framework& f, bool include_trivial, const NumericOptions& opts) {
  std::vector<Flex> out;
  std::size_t cols = static_cast<std::size_t>(f.dim()) * f.graph().num_vertices();
  if (cols == 0) return out;
  if (UseExact(f, opts)) {
    auto vecs = include_trivial ? Kernel(RigidityMatrixT<Rational>(f))
                                : NontrivialFlexesT<Rational>(f, opts.tol);
    for (const auto& x : vecs) out.push_back(ToFlex(f, x));
  } else {
    auto vecs = include_trivial ? Kernel(RigidityMatrixT<double>(f), opts.tol)
                                : NontrivialFlexesT<double>(f, opts.tol);
    for (const auto& x : vecs) out.push_back(ToFlex(f, x));
  }
  return out;
}

std::vector<Stress> Stresses(const Framework& f, const NumericOptions& opts) {
  std::vector<Stress> out;
  if (UseExact(f, opts)) {
    for (const auto& w : StressesT<Rational>(f, opts.tol)) out.push_back(ToStress(f, w));
  } else {
    for (const auto& w : StressesT<double>(f, opts.tol)) out.push_back(ToStress(f, w));
  }
  return out;
}

bool IsInfFlex(const Framework& f, const Flex& q, const NumericOptions& opts) {
  CheckFlexShape(f, q);
  if (UseExact(f, opts) && AllExact(q)) {
    auto r = RigidityMatrixT<Rational>(f);
    auto x = FlexValues<Rational>(f, q);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * x[j];
      if (s != 0) return false;
    }
    return true;
  }
  auto r = RigidityMatrixT<double>(f);
  auto x = FlexValues<double>(f, q);
  double rnorm = 0, xnorm = 0;
  for (double v : r.data()) rnorm += v * v;
  for (double v : x) xnorm += v * v;
  double scale = std::max(1.0, std::sqrt(rnorm)) * std::max(1.0, std::sqrt(xnorm));
  for (std::size_t i = 0; i < r.rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * x[j];
    if (std::abs(s) > opts.tol * scale) return false;
  }
  return true;
}

bool IsNontrivialFlex(const Framework& f, const Flex& q, const NumericOptions& opts) {
  if (!IsInfFlex(f, q, opts)) return false;
  std::size_t cols = static_cast<std::size_t>(f.dim()) * f.graph().num_vertices();
  if (UseExact(f, opts) && AllExact(q)) {
    auto trivial = TrivialBasisT<Rational>(f, opts.tol);
    return !RankFilter<Rational>(trivial, {FlexValues<Rational>(f, q)}, cols, opts.tol).empty();
  }
  auto trivial = TrivialBasisT<double>(f, opts.tol);
  auto x = FlexValues<double>(f, q);
  double norm = 0;
  for (double v : x) norm += v * v;
  if (norm == 0) return false;
  auto basis = OrthonormalSpan(trivial, cols, opts.tol);
  for (const auto& b : basis) {
    double dot = 0;
    for (std::size_t i = 0; i < cols; ++i) dot += x[i] * b[i];
    for (std::size_t i = 0; i < cols; ++i) x[i] -= dot * b[i];
  }
  double rest = 0;
  for (double v : x) rest += v * v;
  return std::sqrt(rest) > std::sqrt(opts.tol) * std::sqrt(norm);
}

bool IsStress(const Framework& f, const Stress& w, const NumericOptions& opts) {
  CheckStressShape(f, w);
  if (UseExact(f, opts) && AllExact(w)) {
    auto r = RigidityMatrixT<Rational>(f);
    std::vector<Rational> x;
    for (const auto& [e, s] : w) x.push_back(s.exact());
    for (std::size_t j = 0; j < r.cols(); ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < r.rows(); ++i) s += x[i] * r(i, j);
      if (s != 0) return false;
    }
    return true;
  }
  auto r = RigidityMatrixT<double>(f);
  std::vector<double> x;
  for (const auto& [e, s] : w) x.push_back(s.to_double());
  double rnorm = 0, xnorm = 0;
  for (double v : r.data()) rnorm += v * v;
  for (double v : x) xnorm += v * v;
  double scale = std::max(1.0, std::sqrt(rnorm)) * std::max(1.0, std::sqrt(xnorm));
  for (std::size_t j = 0; j < r.cols(); ++j) {
    double s = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) s += x[i] * r(i, j);
    if (std::abs(s) > opts.tol * scale) return false;
  }
  return true;
}

bool IsInfRigid(const Framework& f, const NumericOptions& opts) {
  return UseExact(f, opts) ? IsInfRigidT<Rational>(f, opts.tol) : IsInfRigidT<double>(f, opts.tol);
}

bool IsMinInfRigid(const Framework& f, const NumericOptions& opts) {
  if (!IsInfRigid(f, opts)) return false;
  for (const Edge& e : f.graph().edges()) {
    if (IsInfRigid(f.WithoutEdge(e.u, e.v), opts)) return false;
  }
  return true;
}

bool IsRedundantlyInfRigid(const Framework& f, const NumericOptions& opts) {
  if (!IsInfRigid(f, opts)) return false;
  for (const Edge& e : f.graph().edges()) {
    if (!IsInfRigid(f.WithoutEdge(e.u, e.v), opts)) return false;
  }
  return true;
}

bool IsEquivalent(const Framework& a, const Framework& b, const NumericOptions& opts) {
  if (a.graph() != b.graph()) throw Error(ErrorCode::kGraphMismatch, "frameworks have different graphs");
  return CompareLengths(a, b, false, opts);
}

bool IsCongruent(const Framework& a, const Framework& b, const NumericOptions& opts) {
  if (a.graph().vertices() != b.graph().vertices()) {
    throw Error(ErrorCode::kGraphMismatch, "frameworks have different vertex sets");
  }
  return CompareLengths(a, b, true, opts);
}

// --- transformations -------------------------------------------------------

namespace {

Realization MapPoints(const Framework& f, const std::function<Point(const Point&)>& map) {
  Realization r;
  for (const auto& [v, p] : f.realization()) r[v] = map(p);
  return r;
}

Framework Rebuild(const Framework& f, Realization r) { return Framework(f.graph(), std::move(r)); }

Framework LinearMap(const Framework& f, const std::vector<std::vector<double>>& m) {
  if (f.mode() == Mode::kExact) {
    throw Error(ErrorCode::kExactUnsupported, "rotation by an angle is not exact; use Rotate2DExact");
  }
  return Rebuild(f, MapPoints(f, [&](const Point& p) {
    Point q;
    for (const auto& row : m) {
      double s = 0;
      for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * p[k].approx();
      q.push_back(Scalar(s));
    }
    return q;
  }));
}

}  // namespace

Framework Transform(const Framework& f, const Transformation& t) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  if (const auto* tr = std::get_if<Translate>(&t)) {
    if (tr->vector.size() != d) throw Error(ErrorCode::kDimensionMismatch, "translation length != d");
    return Rebuild(f, MapPoints(f, [&](const Point& p) {
      Point q = p;
      for (std::size_t k = 0; k < d; ++k) q[k] += tr->vector[k];
      return q;
    }));
  }
  if (const auto* rot = std::get_if<Rotate2D>(&t)) {
    if (d != 2) throw Error(ErrorCode::kDimensionMismatch, "rotate2d needs a 2-dimensional framework");
    double c = std::cos(rot->angle), s = std::sin(rot->angle);
    return LinearMap(f, {{c, -s}, {s, c}});
  }
  if (const auto* rot = std::get_if<Rotate2DExact>(&t)) {
    if (d != 2) throw Error(ErrorCode::kDimensionMismatch, "rotate2d needs a 2-dimensional framework");
    if (rot->cos * rot->cos + rot->sin * rot->sin != 1) {
      throw Error(ErrorCode::kBadParams, "rotation needs cos^2 + sin^2 = 1");
    }
    Scalar c = f.mode() == Mode::kExact ? Scalar(rot->cos) : Scalar(RationalToDouble(rot->cos));
    Scalar s = f.mode() == Mode::kExact ? Scalar(rot->sin) : Scalar(RationalToDouble(rot->sin));
    return Rebuild(f, MapPoints(f, [&](const Point& p) {
      return Point{c * p[0] - s * p[1], s * p[0] + c * p[1]};
    }));
  }
  if (const auto* rot = std::get_if<Rotate3D>(&t)) {
    if (d != 3 || rot->axis.size() != 3) {
      throw Error(ErrorCode::kDimensionMismatch, "rotate3d needs a 3-dimensional framework and axis");
    }
    double n = std::sqrt(rot->axis[0] * rot->axis[0] + rot->axis[1] * rot->axis[1] +
                         rot->axis[2] * rot->axis[2]);
    if (n == 0) throw Error(ErrorCode::kBadParams, "rotation axis is zero");
    double x = rot->axis[0] / n, y = rot->axis[1] / n, z = rot->axis[2] / n;
    double c = std::cos(rot->angle), s = std::sin(rot->angle), C = 1 - c;
    return LinearMap(f, {{c + x * x * C, x * y * C - z * s, x * z * C + y * s},
                         {y * x * C + z * s, c + y * y * C, y * z * C - x * s},
                         {z * x * C - y * s, z * y * C + x * s, c + z * z * C}});
  }
  if (const auto* sc = std::get_if<Rescale>(&t)) {
    return Rebuild(f, MapPoints(f, [&](const Point& p) {
      Point q = p;
      for (auto& x : q) x *= sc->factor;
      return q;
    }));
  }
  const auto& proj = std::get<Project>(t);
  if (proj.matrix.cols() != d || proj.matrix.rows() >= d || proj.matrix.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "projection matrix must have d columns and fewer rows");
  }
  return Rebuild(f, MapPoints(f, [&](const Point& p) {
    Point q;
    for (std::size_t i = 0; i < proj.matrix.rows(); ++i) {
      Scalar s = Scalar::Zero(f.mode());
      for (std::size_t k = 0; k < d; ++k) s += proj.matrix(i, k) * p[k];
      q.push_back(s);
    }
    return q;
  }));
}

// --- random realizations ---------------------------------------------------

std::int64_t RandomCoordinateBound(std::size_t dim, std::size_t num_vertices, double eps) {
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::kParameterRange, "epsilon must lie in (0, 1)");
  double degree = 2.0 * static_cast<double>(dim) * static_cast<double>(num_vertices);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(degree / eps)));
}

Realization RandomRealization(const Graph& g, int dim, double eps, std::uint64_t seed) {
  std::int64_t bound = RandomCoordinateBound(static_cast<std::size_t>(dim), g.num_vertices(), eps);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  Realization r;
  for (Vertex v : g.vertices()) {
    Point p;
    for (int k = 0; k < dim; ++k) p.push_back(Scalar(Rational(static_cast<long>(coord(rng)))));
    r[v] = std::move(p);
  }
  return r;
}

// --- stress matrix and energy ----------------------------------------------

Matrix<Scalar> StressMatrix(const Graph& g, const Stress& w) {
  if (w.size() != g.num_edges()) throw Error(ErrorCode::kShapeMismatch, "stress must cover every edge");
  Mode mode = Mode::kExact;
  for (const auto& [e, s] : w) {
    if (!g.edges().count(e)) throw Error(ErrorCode::kShapeMismatch, "stress keyed by a non-edge");
    mode = s.mode();
  }
  for (const auto& [e, s] : w) {
    if (s.mode() != mode) throw Error(ErrorCode::kModeMismatch, "stress mixes modes");
  }
  const auto idx = VertexIndex(g);
  const std::size_t n = g.num_vertices();
  Matrix<Scalar> m(n, n, Scalar::Zero(mode));
  for (const auto& [e, s] : w) {
    std::size_t a = idx.at(e.u), b = idx.at(e.v);
    m(a, b) -= s;
    m(b, a) -= s;
    m(a, a) += s;
    m(b, b) += s;
  }
  return m;
}

ExactMatrix ToExactMatrix(const Matrix<Scalar>& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).exact();
  }
  return out;
}

FloatMatrix ToFloatMatrix(const Matrix<Scalar>& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  }
  return out;
}

Scalar StressEnergy(const Framework& f, const Stress& w, const Flex& q, const Flex& r) {
  CheckStressShape(f, w);
  CheckFlexShape(f, q);
  CheckFlexShape(f, r);
  Mode mode = w.empty() ? Mode::kExact : w.begin()->second.mode();
  Scalar total = Scalar::Zero(mode);
  for (const auto& [e, weight] : w) {
    Scalar dot = Scalar::Zero(mode);
    for (int k = 0; k < f.dim(); ++k) {
      dot += (q.at(e.u)[k] - q.at(e.v)[k]) * (r.at(e.u)[k] - r.at(e.v)[k]);
    }
    total += weight * dot;
  }
  return total;
}

// --- prestress stability ---------------------------------------------------

namespace {

template <typename T>
T Energy(const Framework& f, const Vec<T>& w, const Vec<T>& q, const Vec<T>& r) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  const auto idx = VertexIndex(f.graph());
  T total(0);
  std::size_t i = 0;
  for (const Edge& e : f.graph().edges()) {
    std::size_t a = idx.at(e.u), b = idx.at(e.v);
    T dot(0);
    for (std::size_t k = 0; k < d; ++k) dot += (q[a * d + k] - q[b * d + k]) * (r[a * d + k] - r[b * d + k]);
    total += w[i++] * dot;
  }
  return total;
}

template <typename T>
T EnergyScale(const Framework& f, const Vec<T>& w, const Vec<T>& q) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  const auto idx = VertexIndex(f.graph());
  T total(0);
  std::size_t i = 0;
  for (const Edge& e : f.graph().edges()) {
    std::size_t a = idx.at(e.u), b = idx.at(e.v);
    T dot(0);
    for (std::size_t k = 0; k < d; ++k) dot += (q[a * d + k] - q[b * d + k]) * (q[a * d + k] - q[b * d + k]);
    T wi = w[i++];
    total += (wi < 0 ? T(-wi) : wi) * dot;
  }
  return total;
}

// Decides positive (or negative) definiteness of the stress energy on the
// nontrivial flex space. Returns nullopt for unsupported dimensions.
template <typename T>
std::optional<bool> PrestressT(const Framework& f, double tol) {
  if (IsInfRigidT<T>(f, tol)) return true;
  auto flexes = NontrivialFlexesT<T>(f, tol);
  auto stresses = StressesT<T>(f, tol);
  if (stresses.empty()) return false;
  if (flexes.size() == 1) {
    for (const auto& w : stresses) {
      T e = Energy<T>(f, w, flexes[0], flexes[0]);
      if constexpr (std::is_same_v<T, Rational>) {
        if (e != 0) return true;
      } else {
        if (std::abs(e) > tol * std::max(1.0, EnergyScale<T>(f, w, flexes[0]))) return true;
      }
    }
    return false;
  }
  if (stresses.size() != 1) return std::nullopt;
  const auto& w = stresses[0];
  const std::size_t m = flexes.size();
  Matrix<T> gram(m, m, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = Energy<T>(f, w, flexes[i], flexes[j]);
  }
  if constexpr (std::is_same_v<T, Rational>) {
    // Sylvester: all leading minors positive (or alternating for -w).
    bool positive = true, negative = true;
    for (std::size_t k = 1; k <= m; ++k) {
      ExactMatrix lead(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
      }
      int s = sgn(Determinant(lead));
      if (s <= 0) positive = false;
      if (s != (k % 2 == 1 ? -1 : 1)) negative = false;
    }
    return positive || negative;
  } else {
    auto ev = SymmetricEigenvalues(gram);
    double scale = 1.0;
    for (double x : ev) scale = std::max(scale, std::abs(x));
    return ev.front() > tol * scale || ev.back() < -tol * scale;
  }
}

bool Prestress(const Framework& f, const NumericOptions& opts) {
  std::optional<bool> verdict =
      UseExact(f, opts) ? PrestressT<Rational>(f, opts.tol) : PrestressT<double>(f, opts.tol);
  if (!verdict) {
    std::size_t flexes = InfFlexes(f, false, opts).size();
    std::size_t stresses = Stresses(f, opts).size();
    throw Error(ErrorCode::kUnsupportedCase,
                "prestress stability needs a 1-dimensional flex or stress space",
                "flex_dim=" + std::to_string(flexes) + ";stress_dim=" + std::to_string(stresses));
  }
  return *verdict;
}

}  // namespace

bool IsPrestressStable(const Framework& f, const NumericOptions& opts) { return Prestress(f, opts); }

bool IsSecondOrderRigid(const Framework& f, const NumericOptions& opts) {
  // In the supported cases (one nontrivial flex, or one stress) the two
  // notions coincide.
  return Prestress(f, opts);
}

}  // namespace rigikit
