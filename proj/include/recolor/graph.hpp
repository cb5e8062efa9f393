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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

// Error taxonomy used across the library. The CLI maps these onto exit
// codes: ParseError -> 2, DomainError -> 1, InternalError -> 3.
struct RecolorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : RecolorError {
  using RecolorError::RecolorError;
};
struct DomainError : RecolorError {
  using RecolorError::RecolorError;
};
struct InternalError : RecolorError {
  using RecolorError::RecolorError;
};

// Colors are 1-based; coloring[v] is the color of vertex v.
using Coloring = std::vector<int>;

// Simple undirected graph with 0-based vertex ids and sorted adjacency
// lists. Rejects loops and duplicate edges at construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const;
  int max_degree() const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  // Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<int>> connected_components() const;

  // Subgraph induced by `verts` (must be sorted); vertex i of the result is
  // verts[i].
  Graph induced(const std::vector<int>& verts) const;

  bool is_proper(const Coloring& coloring) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace recolor
