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

#ifndef RIGIKIT_MOTION_HPP_
#define RIGIKIT_MOTION_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rigikit/expression.hpp"
#include "rigikit/framework.hpp"

namespace rigikit {

// Parameter interval; either end may be infinite.
struct Interval {
  double lo = 0;
  double hi = 1;
  bool Contains(double t) const { return lo <= t && t <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

using ExpressionTable = std::map<Vertex, std::vector<std::string>>;

// A curve t -> alpha(t) of realizations equivalent to the base framework.
class ParametricMotion {
 public:
  // Validates the motion: symbolically when every expression is rational in
  // t, otherwise on `validation_samples` grid points with tolerance 1e-9.
  // Throws NotAMotion (edge lengths change) or BaseMismatch (alpha(t0) != p),
  // ShapeMismatch for malformed tables and ParameterRange for bad intervals.
  static ParametricMotion Create(const Framework& f, const ExpressionTable& exprs, Interval interval,
                                 double t0, std::size_t validation_samples = 25);

  const Framework& framework() const { return framework_; }
  const ExpressionTable& expressions() const { return source_; }
  const Interval& interval() const { return interval_; }
  double t0() const { return t0_; }

  Realization At(double t) const;

 private:
  explicit ParametricMotion(Framework f) : framework_(std::move(f)) {}

  Framework framework_;
  ExpressionTable source_;
  std::map<Vertex, std::vector<Expression>> exprs_;
  Interval interval_;
  double t0_ = 0;
};

struct ApproximateMotion {
  Framework framework;  // base framework as given
  std::vector<Realization> samples;
  std::size_t steps = 0;
  std::size_t chosen_flex = 0;
  double step_size = 0;
  double tolerance = 0;
  std::optional<std::pair<Vertex, Vertex>> fixed_pair;
};

struct TrackingOptions {
  std::size_t steps = 100;
  std::size_t chosen_flex = 0;
  double step_size = 0.1;
  std::optional<std::pair<Vertex, Vertex>> fixed_pair;
  double tolerance = 1e-8;
  int max_corrector_iterations = 50;
};

// Predictor-corrector tracking along a nontrivial flex. Throws NotFlexible,
// FlexIndexOutOfRange, CorrectorDiverged.
ApproximateMotion TrackMotion(const Framework& f, const TrackingOptions& opts);

using Motion = std::variant<ParametricMotion, ApproximateMotion>;

const Framework& MotionFramework(const Motion& m);

// Parametric: n >= 2 uniform samples over the interval (or `bounds`).
// Approximate: the stored samples; n is ignored.
std::vector<Realization> MotionSamples(const Motion& m, std::size_t n,
                                       std::optional<std::pair<double, double>> bounds = std::nullopt);

// Rigid motion sending a to the origin and b onto the positive first axis.
Realization Pin(const Realization& r, Vertex a, Vertex b);

struct SvgStyle {
  double duration_s = 5;
  int width = 400;
  int height = 400;
  bool show_vertex_labels = false;
};

// Animated SVG through the given samples; dimension 1 or 2 only.
std::string AnimateSvg(const Graph& g, const std::vector<Realization>& samples, const SvgStyle& style = {});
std::string AnimateSvg(const Motion& m, const SvgStyle& style = {}, std::size_t parametric_samples = 60);

}  // namespace rigikit

#endif  // RIGIKIT_MOTION_HPP_
