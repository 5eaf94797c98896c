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

#include "rigikit/sparsity.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rigikit/error.hpp"

namespace rigikit {

PebbleGame::PebbleGame(const VertexSet& vertices, int k, int l) : k_(k), l_(l) {
  if (k < 1 || l < 0 || l >= 2 * k) {
    throw Error(ErrorCode::kParameterRange,
                "pebble game needs k >= 1 and 0 <= l < 2k, got (" + std::to_string(k) + "," +
                    std::to_string(l) + ")");
  }
  labels_.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = static_cast<int>(i);
  pebbles_.assign(labels_.size(), k);
  out_.assign(labels_.size(), {});
}

int PebbleGame::Pebbles(Vertex v) const { return pebbles_[index_.at(v)]; }

std::size_t PebbleGame::OutDegree(Vertex v) const { return out_[index_.at(v)].size(); }

std::vector<std::pair<Vertex, Vertex>> PebbleGame::Orientation() const {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    for (int j : out_[i]) arcs.emplace_back(labels_[i], labels_[j]);
  }
  return arcs;
}

void PebbleGame::Reverse(int tail, int head) {
  auto& from = out_[tail];
  from.erase(std::find(from.begin(), from.end(), head));
  auto& to = out_[head];
  to.insert(std::lower_bound(to.begin(), to.end(), tail), tail);
}

bool PebbleGame::FindPebble(int from, std::vector<char>& visited, std::vector<int>& parent) {
  // Depth-first over out-arcs; the first free pebble found is moved back to
  // the root by reversing the discovered path.
  std::vector<std::pair<int, std::size_t>> stack{{from, 0}};
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    if (next >= out_[x].size()) {
      stack.pop_back();
      continue;
    }
    int y = out_[x][next++];
    if (visited[y]) continue;
    visited[y] = 1;
    parent[y] = x;
    if (pebbles_[y] > 0) {
      for (int w = y; w != from; w = parent[w]) Reverse(parent[w], w);
      --pebbles_[y];
      ++pebbles_[from];
      return true;
    }
    stack.emplace_back(y, 0);
  }
  return false;
}

int PebbleGame::Gather(int u, int v, int want) {
  while (pebbles_[u] + pebbles_[v] < want) {
    bool moved = false;
    for (int root : {u, v}) {
      if (pebbles_[root] >= k_) continue;
      std::vector<char> visited(labels_.size(), 0);
      std::vector<int> parent(labels_.size(), -1);
      visited[u] = visited[v] = 1;
      if (FindPebble(root, visited, parent)) {
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return pebbles_[u] + pebbles_[v];
}

bool PebbleGame::AddEdge(const Edge& e) {
  int u = index_.at(e.u);
  int v = index_.at(e.v);
  if (Gather(u, v, l_ + 1) < l_ + 1) {
    rejected_.insert(e);
    return false;
  }
  int tail = pebbles_[u] > 0 ? u : v;
  int head = tail == u ? v : u;
  --pebbles_[tail];
  auto& arcs = out_[tail];
  arcs.insert(std::lower_bound(arcs.begin(), arcs.end(), head), head);
  accepted_.insert(e);
  return true;
}

std::vector<VertexSet> PebbleGame::Components() {
  // For an accepted edge uv holding exactly l pebbles after a maximal
  // gather, a vertex set containing u and v is tight iff it is closed under
  // out-arcs and holds no other free pebble. The largest such set is the
  // complement of everything that can reach a free pebble elsewhere.
  const std::size_t n = labels_.size();
  std::vector<std::vector<int>> in(n);
  std::vector<VertexSet> components;
  std::vector<std::vector<char>> member;
  auto covered = [&](int u, int v) {
    for (const auto& m : member) {
      if (m[u] && m[v]) return true;
    }
    return false;
  };
  for (const Edge& e : accepted_) {
    int u = index_.at(e.u);
    int v = index_.at(e.v);
    if (covered(u, v)) continue;
    if (Gather(u, v, l_ + 1) > l_) continue;
    for (auto& list : in) list.clear();
    for (std::size_t x = 0; x < n; ++x) {
      for (int y : out_[x]) in[y].push_back(static_cast<int>(x));
    }
    std::vector<char> bad(n, 0);
    std::deque<int> queue;
    for (std::size_t x = 0; x < n; ++x) {
      if (static_cast<int>(x) != u && static_cast<int>(x) != v && pebbles_[x] > 0) {
        bad[x] = 1;
        queue.push_back(static_cast<int>(x));
      }
    }
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int x : in[y]) {
        if (!bad[x]) {
          bad[x] = 1;
          queue.push_back(x);
        }
      }
    }
    std::vector<char> m(n, 0);
    VertexSet comp;
    for (std::size_t x = 0; x < n; ++x) {
      if (!bad[x]) {
        m[x] = 1;
        comp.insert(labels_[x]);
      }
    }
    member.push_back(std::move(m));
    components.push_back(std::move(comp));
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool in_any = std::any_of(member.begin(), member.end(),
                              [x](const std::vector<char>& m) { return m[x] != 0; });
    if (!in_any) components.push_back({labels_[x]});
  }
  std::sort(components.begin(), components.end());
  return components;
}

namespace {

PebbleGame Play(const Graph& g, int k, int l) {
  PebbleGame game(g.vertices(), k, l);
  for (const Edge& e : g.edges()) game.AddEdge(e);
  return game;
}

}  // namespace

bool IsKLSparse(const Graph& g, int k, int l) {
  return Play(g, k, l).rejected().empty();
}

bool IsKLTight(const Graph& g, int k, int l) {
  PebbleGame game = Play(g, k, l);
  long target = static_cast<long>(k) * static_cast<long>(g.num_vertices()) - l;
  return game.rejected().empty() && static_cast<long>(g.num_edges()) == target;
}

std::vector<VertexSet> PebbleComponents(const Graph& g, int k, int l) {
  return Play(g, k, l).Components();
}

std::size_t SparseRank(const Graph& g, int k, int l) { return Play(g, k, l).accepted().size(); }

}  // namespace rigikit
