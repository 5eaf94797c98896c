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

#include "rigikit/motion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "rigikit/error.hpp"

namespace rigikit {

namespace {

std::string FormatDouble(double x) { return DoubleToString(x); }

std::string EdgeText(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

double SquaredLength(const Realization& r, const Edge& e) {
  const Point& a = r.at(e.u);
  const Point& b = r.at(e.v);
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double d = a[k].to_double() - b[k].to_double();
    s += d * d;
  }
  return s;
}

std::vector<double> Grid(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 1) return {lo};
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

}  // namespace

// --- parametric motions ----------------------------------------------------

Realization ParametricMotion::At(double t) const {
  Realization r;
  for (const auto& [v, coords] : exprs_) {
    Point p;
    for (const auto& e : coords) p.push_back(Scalar(Evaluate(e, Scalar(t), Mode::kApprox).to_double()));
    r[v] = std::move(p);
  }
  return r;
}

ParametricMotion ParametricMotion::Create(const Framework& f, const ExpressionTable& exprs,
                                          Interval interval, double t0, std::size_t validation_samples) {
  if (!(interval.lo < interval.hi) || std::isnan(interval.lo) || std::isnan(interval.hi)) {
    throw Error(ErrorCode::kParameterRange, "interval needs lo < hi");
  }
  if (!std::isfinite(t0) || !interval.Contains(t0)) {
    throw Error(ErrorCode::kParameterRange, "t0 must lie in the interval");
  }
  if (validation_samples < 2) throw Error(ErrorCode::kParameterRange, "need at least 2 validation samples");
  if (exprs.size() != f.graph().num_vertices()) {
    throw Error(ErrorCode::kShapeMismatch, "one expression list per vertex is required");
  }
  ParametricMotion m(f);
  m.source_ = exprs;
  m.interval_ = interval;
  m.t0_ = t0;
  bool rational = f.mode() == Mode::kExact;
  for (const auto& [v, texts] : exprs) {
    if (!f.graph().HasVertex(v) || static_cast<int>(texts.size()) != f.dim()) {
      throw Error(ErrorCode::kShapeMismatch, "vertex " + std::to_string(v) + " needs " +
                                                 std::to_string(f.dim()) + " expressions");
    }
    auto& parsed = m.exprs_[v];
    for (const auto& text : texts) {
      parsed.push_back(ParseExpression(text));
      rational = rational && parsed.back().IsRationalClosed();
    }
  }

  double lo = std::isfinite(interval.lo) ? interval.lo : t0 - 10;
  double hi = std::isfinite(interval.hi) ? interval.hi : t0 + 10;
  const auto grid = Grid(lo, hi, validation_samples);
  const Realization& base = f.realization();

  auto numeric_witness = [&](const Edge& e) -> std::optional<double> {
    double target = SquaredLength(base, e);
    for (double t : grid) {
      double got = SquaredLength(m.At(t), e);
      if (std::abs(got - target) > 1e-9 * std::max(1.0, target)) return t;
    }
    return std::nullopt;
  };
  auto not_a_motion = [&](const Edge& e, double t) {
    return Error(ErrorCode::kNotAMotion, "edge " + EdgeText(e) + " changes length along the motion",
                 "t=" + FormatDouble(t) + ";edge=" + EdgeText(e));
  };

  for (const Edge& e : f.graph().edges()) {
    if (rational) {
      RationalFunction len;
      len.numerator = Polynomial();
      for (int k = 0; k < f.dim(); ++k) {
        auto a = ToRationalFunction(m.exprs_.at(e.u)[static_cast<std::size_t>(k)]);
        auto b = ToRationalFunction(m.exprs_.at(e.v)[static_cast<std::size_t>(k)]);
        RationalFunction d = *a - *b;
        len = len + d * d;
      }
      Rational target = 0;
      for (int k = 0; k < f.dim(); ++k) {
        Rational d = base.at(e.u)[static_cast<std::size_t>(k)].exact() -
                     base.at(e.v)[static_cast<std::size_t>(k)].exact();
        target += d * d;
      }
      RationalFunction c;
      c.numerator = Polynomial::Constant(target);
      if (!len.IdenticallyEquals(c)) throw not_a_motion(e, numeric_witness(e).value_or(t0));
    } else if (auto t = numeric_witness(e)) {
      throw not_a_motion(e, *t);
    }
  }

  Realization at = m.At(t0);
  for (const auto& [v, p] : base) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      double want = p[k].to_double();
      if (std::abs(at.at(v)[k].to_double() - want) > 1e-9 * std::max(1.0, std::abs(want))) {
        throw Error(ErrorCode::kBaseMismatch, "alpha(t0) differs from the framework realization",
                    "vertex=" + std::to_string(v) + ";coordinate=" + std::to_string(k));
      }
    }
  }
  return m;
}

// --- approximate motions ---------------------------------------------------

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Layout {
  std::vector<Vertex> vertices;
  std::map<Vertex, std::size_t> index;
  std::vector<Edge> edges;
  std::size_t d = 0;
};

VectorXd Flatten(const Layout& l, const Realization& r) {
  VectorXd x(static_cast<Eigen::Index>(l.vertices.size() * l.d));
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    for (std::size_t k = 0; k < l.d; ++k) {
      x(static_cast<Eigen::Index>(i * l.d + k)) = r.at(l.vertices[i])[k].to_double();
    }
  }
  return x;
}

Realization Unflatten(const Layout& l, const VectorXd& x) {
  Realization r;
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    Point p;
    for (std::size_t k = 0; k < l.d; ++k) p.push_back(Scalar(x(static_cast<Eigen::Index>(i * l.d + k))));
    r[l.vertices[i]] = std::move(p);
  }
  return r;
}

VectorXd Constraints(const Layout& l, const VectorXd& x, const VectorXd& target) {
  VectorXd f(static_cast<Eigen::Index>(l.edges.size()));
  for (std::size_t e = 0; e < l.edges.size(); ++e) {
    auto a = static_cast<Eigen::Index>(l.index.at(l.edges[e].u) * l.d);
    auto b = static_cast<Eigen::Index>(l.index.at(l.edges[e].v) * l.d);
    auto d = static_cast<Eigen::Index>(l.d);
    f(static_cast<Eigen::Index>(e)) = (x.segment(a, d) - x.segment(b, d)).squaredNorm() - target(static_cast<Eigen::Index>(e));
  }
  return f;
}

MatrixXd Jacobian(const Layout& l, const VectorXd& x) {
  MatrixXd j = MatrixXd::Zero(static_cast<Eigen::Index>(l.edges.size()), x.size());
  auto d = static_cast<Eigen::Index>(l.d);
  for (std::size_t e = 0; e < l.edges.size(); ++e) {
    auto a = static_cast<Eigen::Index>(l.index.at(l.edges[e].u) * l.d);
    auto b = static_cast<Eigen::Index>(l.index.at(l.edges[e].v) * l.d);
    VectorXd diff = 2 * (x.segment(a, d) - x.segment(b, d));
    j.block(static_cast<Eigen::Index>(e), a, 1, d) = diff.transpose();
    j.block(static_cast<Eigen::Index>(e), b, 1, d) = -diff.transpose();
  }
  return j;
}

// Orthonormal rows spanning the nontrivial flexes at x.
std::vector<VectorXd> FlexBasis(const Layout& l, const Graph& g, const VectorXd& x) {
  Framework f(g, Unflatten(l, x));
  std::vector<VectorXd> out;
  for (const Flex& q : InfFlexes(f, false, {true, kDefaultTolerance})) out.push_back(Flatten(l, q));
  return out;
}

// Proper rotation (reflection when d = 1) taking the unit vector u to e1.
MatrixXd RotationToAxis(const VectorXd& u) {
  const auto d = u.size();
  MatrixXd r = MatrixXd::Identity(d, d);
  if (d == 1) {
    if (u(0) < 0) r(0, 0) = -1;
    return r;
  }
  if (d == 2) {
    r << u(0), u(1), -u(1), u(0);
    return r;
  }
  // Householder reflection sending u to -sign(u0) e1, reflected against the
  // larger of u -+ e1 for stability, then fixed up to a proper rotation.
  VectorXd e1 = VectorXd::Zero(d);
  e1(0) = 1;
  bool positive = u(0) >= 0;
  VectorXd v = positive ? VectorXd(u + e1) : VectorXd(u - e1);
  MatrixXd h = MatrixXd::Identity(d, d) - 2 * v * v.transpose() / v.squaredNorm();
  if (positive) h = -h;  // now h u = e1
  if (h.determinant() < 0) {
    MatrixXd flip = MatrixXd::Identity(d, d);
    flip(d - 1, d - 1) = -1;  // fixes e1
    h = flip * h;
  }
  return h;
}

struct PinResult {
  VectorXd x;
  MatrixXd rotation;
};

PinResult PinFlat(const Layout& l, const VectorXd& x, Vertex a, Vertex b) {
  auto d = static_cast<Eigen::Index>(l.d);
  VectorXd origin = x.segment(static_cast<Eigen::Index>(l.index.at(a) * l.d), d);
  VectorXd dir = x.segment(static_cast<Eigen::Index>(l.index.at(b) * l.d), d) - origin;
  MatrixXd rot = dir.norm() > 0 ? RotationToAxis(dir / dir.norm()) : MatrixXd::Identity(d, d);
  VectorXd out(x.size());
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    auto s = static_cast<Eigen::Index>(i * l.d);
    out.segment(s, d) = rot * (x.segment(s, d) - origin);
  }
  // The pinned pair lies exactly on the first axis.
  auto sb = static_cast<Eigen::Index>(l.index.at(b) * l.d);
  out.segment(static_cast<Eigen::Index>(l.index.at(a) * l.d), d).setZero();
  for (Eigen::Index k = 1; k < d; ++k) out(sb + k) = 0;
  return {out, rot};
}

VectorXd RotateField(const Layout& l, const MatrixXd& rot, const VectorXd& q) {
  auto d = static_cast<Eigen::Index>(l.d);
  VectorXd out(q.size());
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    auto s = static_cast<Eigen::Index>(i * l.d);
    out.segment(s, d) = rot * q.segment(s, d);
  }
  return out;
}

}  // namespace

Realization Pin(const Realization& r, Vertex a, Vertex b) {
  Layout l;
  for (const auto& [v, p] : r) {
    l.index[v] = l.vertices.size();
    l.vertices.push_back(v);
    l.d = p.size();
  }
  if (!l.index.count(a) || !l.index.count(b) || a == b) {
    throw Error(ErrorCode::kUnknownVertex, "pinned pair must be two distinct vertices");
  }
  return Unflatten(l, PinFlat(l, Flatten(l, r), a, b).x);
}

ApproximateMotion TrackMotion(const Framework& f, const TrackingOptions& opts) {
  if (!(opts.step_size > 0)) throw Error(ErrorCode::kParameterRange, "step size must be positive");
  if (!(opts.tolerance > 0)) throw Error(ErrorCode::kParameterRange, "tolerance must be positive");
  Layout l;
  for (Vertex v : f.graph().vertices()) {
    l.index[v] = l.vertices.size();
    l.vertices.push_back(v);
  }
  l.edges = f.graph().EdgeList();
  l.d = static_cast<std::size_t>(f.dim());
  if (opts.fixed_pair) {
    auto [a, b] = *opts.fixed_pair;
    if (!f.graph().HasVertex(a) || !f.graph().HasVertex(b) || a == b) {
      throw Error(ErrorCode::kUnknownVertex, "fixed pair must be two distinct vertices");
    }
  }

  const Graph& g = f.graph();
  VectorXd x = Flatten(l, f.realization());
  if (opts.fixed_pair) x = PinFlat(l, x, opts.fixed_pair->first, opts.fixed_pair->second).x;
  VectorXd target(static_cast<Eigen::Index>(l.edges.size()));
  for (std::size_t e = 0; e < l.edges.size(); ++e) {
    target(static_cast<Eigen::Index>(e)) = SquaredLength(f.realization(), l.edges[e]);
  }

  auto basis = FlexBasis(l, g, x);
  if (basis.empty()) throw Error(ErrorCode::kNotFlexible, "framework has no nontrivial infinitesimal flex");
  if (opts.chosen_flex >= basis.size()) {
    throw Error(ErrorCode::kFlexIndexOutOfRange, "flex index out of range",
                "index=" + std::to_string(opts.chosen_flex) + ";available=" + std::to_string(basis.size()));
  }
  VectorXd q = basis[opts.chosen_flex].normalized();

  ApproximateMotion m{f, {Unflatten(l, x)}, opts.steps, opts.chosen_flex, opts.step_size,
                      opts.tolerance, opts.fixed_pair};
  for (std::size_t step = 1; step <= opts.steps; ++step) {
    VectorXd y = x + opts.step_size * q;
    VectorXd res = Constraints(l, y, target);
    int iter = 0;
    while (res.lpNorm<Eigen::Infinity>() > opts.tolerance && iter < opts.max_corrector_iterations) {
      MatrixXd j = Jacobian(l, y);
      VectorXd delta = j.completeOrthogonalDecomposition().solve(-res);
      y += delta;
      res = Constraints(l, y, target);
      ++iter;
    }
    double residual = res.size() ? res.lpNorm<Eigen::Infinity>() : 0.0;
    if (!(residual <= opts.tolerance)) {
      throw Error(ErrorCode::kCorrectorDiverged, "corrector did not converge",
                  "step=" + std::to_string(step) + ";residual=" + FormatDouble(residual));
    }
    if (opts.fixed_pair) {
      auto pinned = PinFlat(l, y, opts.fixed_pair->first, opts.fixed_pair->second);
      y = pinned.x;
      q = RotateField(l, pinned.rotation, q);
      res = Constraints(l, y, target);
      residual = res.size() ? res.lpNorm<Eigen::Infinity>() : 0.0;
      if (!(residual <= opts.tolerance)) {
        throw Error(ErrorCode::kCorrectorDiverged, "pinning broke the edge constraints",
                    "step=" + std::to_string(step) + ";residual=" + FormatDouble(residual));
      }
    }
    x = y;
    m.samples.push_back(Unflatten(l, x));
    if (step == opts.steps) break;
    // Vector transport: keep the flex closest to the previous direction.
    VectorXd next = VectorXd::Zero(q.size());
    for (const auto& b : FlexBasis(l, g, x)) next += b.dot(q) * b;
    if (next.norm() < 1e-12) {
      throw Error(ErrorCode::kCorrectorDiverged, "lost the flex direction at a singular configuration",
                  "step=" + std::to_string(step) + ";residual=" + FormatDouble(residual));
    }
    q = next.normalized();
  }
  return m;
}

// --- sampling and animation ------------------------------------------------

const Framework& MotionFramework(const Motion& m) {
  if (const auto* p = std::get_if<ParametricMotion>(&m)) return p->framework();
  return std::get<ApproximateMotion>(m).framework;
}

std::vector<Realization> MotionSamples(const Motion& m, std::size_t n,
                                       std::optional<std::pair<double, double>> bounds) {
  if (const auto* a = std::get_if<ApproximateMotion>(&m)) return a->samples;
  const auto& p = std::get<ParametricMotion>(m);
  if (n < 2) throw Error(ErrorCode::kParameterRange, "need at least 2 samples");
  double lo = p.interval().lo, hi = p.interval().hi;
  if (bounds) {
    lo = bounds->first;
    hi = bounds->second;
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::kUnboundedInterval, "sampling an unbounded interval needs explicit bounds");
  }
  std::vector<Realization> out;
  for (double t : Grid(lo, hi, n)) out.push_back(p.At(t));
  return out;
}

std::string AnimateSvg(const Graph& g, const std::vector<Realization>& samples, const SvgStyle& style) {
  if (samples.empty()) throw Error(ErrorCode::kParameterRange, "no samples to animate");
  std::size_t d = samples.front().begin()->second.size();
  if (d > 2 || d == 0) throw Error(ErrorCode::kUnsupportedDimension, "animation supports dimensions 1 and 2",
                                   "dim=" + std::to_string(d));
  auto coord = [&](const Realization& r, Vertex v, std::size_t k) {
    return k < d ? r.at(v)[k].to_double() : 0.0;
  };
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& r : samples) {
    for (Vertex v : g.vertices()) {
      minx = std::min(minx, coord(r, v, 0));
      maxx = std::max(maxx, coord(r, v, 0));
      miny = std::min(miny, coord(r, v, 1));
      maxy = std::max(maxy, coord(r, v, 1));
    }
  }
  double span = std::max(maxx - minx, maxy - miny);
  if (span <= 0) span = 1;
  double margin = 0.05 * span;
  minx -= margin;
  maxx += margin;
  miny -= margin;
  maxy += margin;
  double scale = std::min(style.width / (maxx - minx), style.height / (maxy - miny));
  auto px = [&](double x) { return (x - minx) * scale; };
  auto py = [&](double y) { return style.height - (y - miny) * scale; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto values = [&](const std::function<double(const Realization&)>& fn) {
    std::string s;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (i) s += ';';
      s += fmt(fn(samples[i]));
    }
    return s;
  };
  std::string dur = fmt(style.duration_s) + "s";
  auto animate = [&](const std::string& attr, const std::string& vals) {
    return "<animate attributeName=\"" + attr + "\" values=\"" + vals + "\" dur=\"" + dur +
           "\" repeatCount=\"indefinite\"/>";
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
      << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height
      << "\">\n";
  const Realization& first = samples.front();
  for (const Edge& e : g.edges()) {
    out << "  <line x1=\"" << fmt(px(coord(first, e.u, 0))) << "\" y1=\"" << fmt(py(coord(first, e.u, 1)))
        << "\" x2=\"" << fmt(px(coord(first, e.v, 0))) << "\" y2=\"" << fmt(py(coord(first, e.v, 1)))
        << "\" stroke=\"black\" stroke-width=\"2\">";
    out << animate("x1", values([&](const Realization& r) { return px(coord(r, e.u, 0)); }));
    out << animate("y1", values([&](const Realization& r) { return py(coord(r, e.u, 1)); }));
    out << animate("x2", values([&](const Realization& r) { return px(coord(r, e.v, 0)); }));
    out << animate("y2", values([&](const Realization& r) { return py(coord(r, e.v, 1)); }));
    out << "</line>\n";
  }
  for (Vertex v : g.vertices()) {
    out << "  <circle cx=\"" << fmt(px(coord(first, v, 0))) << "\" cy=\"" << fmt(py(coord(first, v, 1)))
        << "\" r=\"5\" fill=\"white\" stroke=\"black\">";
    out << animate("cx", values([&](const Realization& r) { return px(coord(r, v, 0)); }));
    out << animate("cy", values([&](const Realization& r) { return py(coord(r, v, 1)); }));
    out << "</circle>\n";
    if (style.show_vertex_labels) {
      out << "  <text x=\"" << fmt(px(coord(first, v, 0)) + 7) << "\" y=\"" << fmt(py(coord(first, v, 1)) - 7)
          << "\" font-size=\"12\">" << v;
      out << animate("x", values([&](const Realization& r) { return px(coord(r, v, 0)) + 7; }));
      out << animate("y", values([&](const Realization& r) { return py(coord(r, v, 1)) - 7; }));
      out << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string AnimateSvg(const Motion& m, const SvgStyle& style, std::size_t parametric_samples) {
  const Framework& f = MotionFramework(m);
  if (f.dim() > 2) {
    throw Error(ErrorCode::kUnsupportedDimension, "animation supports dimensions 1 and 2",
                "dim=" + std::to_string(f.dim()));
  }
  return AnimateSvg(f.graph(), MotionSamples(m, parametric_samples), style);
}

}  // namespace rigikit
