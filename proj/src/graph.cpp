// Copyright 2026 The chordal-recolor Authors
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

#include "recolor/graph.hpp"

#include <algorithm>

namespace recolor {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw ParseError("vertex count must be non-negative");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range: (" + std::to_string(u) +
                       "," + std::to_string(v) + ")");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw ParseError("duplicate edge at vertex " + std::to_string(v));
  }
}

std::size_t Graph::num_edges() const {
  std::size_t deg_sum = 0;
  for (const auto& a : adj_) deg_sum += a.size();
  return deg_sum / 2;
}

int Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return static_cast<int>(d);
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v])
      if (v < w) result.emplace_back(v, w);
  return result;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int start = 0; start < n_; ++start) {
    if (comp[start] != -1) continue;
    int id = static_cast<int>(components.size());
    components.emplace_back();
    stack.push_back(start);
    comp[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      components[id].push_back(v);
      for (int w : adj_[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edge_list;
  for (int v : verts)
    for (int w : adj_[v])
      if (v < w && local[w] != -1) edge_list.emplace_back(local[v], local[w]);
  return Graph(static_cast<int>(verts.size()), edge_list);
}

bool Graph::is_proper(const Coloring& coloring) const {
  if (static_cast<int>(coloring.size()) != n_) return false;
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v])
      if (coloring[v] == coloring[w]) return false;
  return true;
}

}  // namespace recolor
