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

#include "recolor/chordal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace recolor {

namespace {

// Visit order of MCS: repeatedly pick the unvisited vertex with the most
// visited neighbors, smallest id on ties. The reverse visit order is the
// PEO candidate.
std::vector<int> mcs_visit_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<std::set<int>> buckets(n + 1);
  for (int v = 0; v < n; ++v) buckets[0].insert(v);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  int maxw = 0;
  for (int step = 0; step < n; ++step) {
    while (buckets[maxw].empty()) --maxw;
    int v = *buckets[maxw].begin();
    buckets[maxw].erase(buckets[maxw].begin());
    visited[v] = 1;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (visited[w]) continue;
      buckets[weight[w]].erase(w);
      ++weight[w];
      buckets[weight[w]].insert(w);
      maxw = std::max(maxw, weight[w]);
    }
  }
  return order;
}

// Shortest u-w path avoiding `forbidden`; empty if none.
std::vector<int> bfs_path_avoiding(const Graph& g, int u, int w,
                                   const std::vector<char>& forbidden) {
  const int n = g.num_vertices();
  std::vector<int> prev(n, -2);
  std::deque<int> queue;
  prev[u] = -1;
  queue.push_back(u);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == w) break;
    for (int x : g.neighbors(v)) {
      if (prev[x] != -2 || forbidden[x]) continue;
      prev[x] = v;
      queue.push_back(x);
    }
  }
  if (prev[w] == -2) return {};
  std::vector<int> path;
  for (int v = w; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Given v with non-adjacent neighbors u, w: search for a hole through v.
std::vector<int> hole_through(const Graph& g, int v, int u, int w) {
  std::vector<char> forbidden(g.num_vertices(), 0);
  forbidden[v] = 1;
  for (int x : g.neighbors(v)) forbidden[x] = 1;
  forbidden[u] = 0;
  forbidden[w] = 0;
  auto path = bfs_path_avoiding(g, u, w, forbidden);
  if (path.empty()) return {};
  // v + shortest path u..w: the path is induced, its interior avoids N(v),
  // and u,w are non-adjacent, so the cycle has no chord.
  std::vector<int> cycle;
  cycle.push_back(v);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace

std::vector<int> find_hole(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        auto cycle = hole_through(g, v, nb[i], nb[j]);
        if (!cycle.empty()) return cycle;
      }
    }
  }
  throw InternalError("find_hole called on a chordal graph");
}

ChordalityResult maximum_cardinality_search(const Graph& g) {
  const int n = g.num_vertices();
  auto visit = mcs_visit_order(g);
  Peo peo;
  peo.order.assign(visit.rbegin(), visit.rend());
  peo.pos.assign(n, 0);
  for (int i = 0; i < n; ++i) peo.pos[peo.order[i]] = i;

  // Verification: for each vertex, the later neighbors minus the first of
  // them must all be adjacent to that first one.
  for (int i = 0; i < n; ++i) {
    int v = peo.order[i];
    int u = -1;
    for (int w : g.neighbors(v))
      if (peo.pos[w] > i && (u == -1 || peo.pos[w] < peo.pos[u])) u = w;
    if (u == -1) continue;
    for (int w : g.neighbors(v)) {
      if (peo.pos[w] <= i || w == u) continue;
      if (!g.has_edge(u, w)) {
        auto cycle = hole_through(g, v, u, w);
        if (cycle.empty()) cycle = find_hole(g);
        return ChordalityResult{std::nullopt, cycle};
      }
    }
  }
  return ChordalityResult{std::move(peo), {}};
}

bool is_peo(const Graph& g, const std::vector<int>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

CanonicalClasses canonical_coloring(const Graph& g, const Peo& peo) {
  const int n = g.num_vertices();
  CanonicalClasses result;
  result.c0.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = peo.order[i];
    std::vector<char> used(g.degree(v) + 2, 0);
    for (int w : g.neighbors(v)) {
      int c = result.c0[w];
      if (c != 0 && c < static_cast<int>(used.size())) used[c] = 1;
    }
    int color = 1;
    while (used[color]) ++color;
    result.c0[v] = color;
    result.omega = std::max(result.omega, color);
  }
  if (n == 0) result.omega = 0;
  result.classes.assign(result.omega, {});
  for (int v = 0; v < n; ++v) result.classes[result.c0[v] - 1].push_back(v);
  return result;
}

}  // namespace recolor
