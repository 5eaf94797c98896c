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

#include "rigikit/tikz.hpp"

#include <sstream>

#include "rigikit/error.hpp"

namespace rigikit {

std::string ToTikz(const Framework& f, const TikzStyle& style) {
  if (f.dim() != 2) {
    throw Error(ErrorCode::kUnsupportedDimension, "TikZ export needs a planar framework",
                "dim=" + std::to_string(f.dim()));
  }
  std::ostringstream out;
  out << "\\begin{tikzpicture}";
  if (style.define_styles) {
    out << "[" << style.vertex_style
        << "/.style={fill=black,draw=white,circle,inner sep=0pt,minimum size=4pt}, " << style.edge_style
        << "/.style={line width=1.5pt,black!60!white}]";
  }
  out << "\n";
  for (const auto& [v, p] : f.realization()) {
    out << "  \\node[" << style.vertex_style << "] (" << v << ") at (" << DoubleToString(p[0].to_double())
        << ", " << DoubleToString(p[1].to_double()) << ") {" << (style.vertex_labels ? std::to_string(v) : "")
        << "};\n";
  }
  for (const Edge& e : f.graph().edges()) {
    out << "  \\draw[" << style.edge_style << "] (" << e.u << ")--(" << e.v << ");\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace rigikit
