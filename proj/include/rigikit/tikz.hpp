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

#ifndef RIGIKIT_TIKZ_HPP_
#define RIGIKIT_TIKZ_HPP_

#include <string>

#include "rigikit/framework.hpp"

namespace rigikit {

struct TikzStyle {
  std::string vertex_style = "gvertex";
  std::string edge_style = "edge";
  bool define_styles = true;  // emit default definitions for the two styles
  bool vertex_labels = false;
};

// One \node per vertex and one \draw per edge. Planar frameworks only;
// throws UnsupportedDimension otherwise.
std::string ToTikz(const Framework& f, const TikzStyle& style = {});

}  // namespace rigikit

#endif  // RIGIKIT_TIKZ_HPP_
