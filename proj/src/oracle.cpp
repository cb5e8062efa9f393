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

#include "recolor/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <vector>

namespace recolor {

namespace {

// All proper colorings, enumerated by backtracking in vertex order with
// colors ascending, stored as flat rows of n bytes in lexicographic order.
struct ColoringSpace {
  int n = 0;
  int k = 0;
  std::vector<unsigned char> flat;  // size() = count * n

  std::size_t count() const { return n == 0 ? 0 : flat.size() / n; }
  const unsigned char* row(std::size_t i) const { return flat.data() + i * n; }

  std::optional<std::size_t> index_of(const Coloring& c) const {
    std::vector<unsigned char> key(n);
    for (int v = 0; v < n; ++v) key[v] = static_cast<unsigned char>(c[v]);
    std::size_t lo = 0, hi = count();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      int cmp = std::memcmp(row(mid), key.data(), n);
      if (cmp < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count() && std::memcmp(row(lo), key.data(), n) == 0) return lo;
    return std::nullopt;
  }
};

ColoringSpace enumerate_proper(const Graph& g, int k,
                               const OracleLimits& limits) {
  ColoringSpace space;
  space.n = g.num_vertices();
  space.k = k;
  const int n = space.n;
  if (n == 0) return space;
  std::vector<unsigned char> cur(n, 0);
  int v = 0;
  std::size_t count = 0;
  while (v >= 0) {
    if (v == n) {
      if (++count > limits.state_cap)
        throw DomainError("state space exceeds the cap of " +
                          std::to_string(limits.state_cap) +
                          " proper colorings");
      space.flat.insert(space.flat.end(), cur.begin(), cur.end());
      --v;
      continue;
    }
    bool placed = false;
    for (int c = cur[v] + 1; c <= k && !placed; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u < v && cur[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur[v] = static_cast<unsigned char>(c);
        placed = true;
      }
    }
    if (placed) {
      ++v;
    } else {
      cur[v] = 0;
      --v;
    }
  }
  return space;
}

// BFS over the reconfiguration graph from `source`; returns distances
// (-1 = unreached).
std::vector<long> reconfig_bfs(const Graph& g, const ColoringSpace& space,
                               std::size_t source) {
  const int n = space.n;
  std::vector<long> dist(space.count(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  Coloring tmp(n);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    const unsigned char* row = space.row(id);
    for (int v = 0; v < n; ++v) tmp[v] = row[v];
    for (int v = 0; v < n; ++v) {
      int old = tmp[v];
      for (int c = 1; c <= space.k; ++c) {
        if (c == old) continue;
        bool ok = true;
        for (int u : g.neighbors(v)) {
          if (tmp[u] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        tmp[v] = c;
        auto idx = space.index_of(tmp);
        tmp[v] = old;
        if (!idx) throw InternalError("neighbor coloring missing from space");
        if (dist[*idx] == -1) {
          dist[*idx] = dist[id] + 1;
          queue.push_back(*idx);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<long> bfs_distance(const Graph& g, int k, const Coloring& c1,
                                 const Coloring& c2,
                                 const OracleLimits& limits) {
  if (!g.is_proper(c1) || !g.is_proper(c2))
    throw DomainError("bfs_distance: endpoint coloring is not proper");
  for (const Coloring* c : {&c1, &c2})
    for (int col : *c)
      if (col < 1 || col > k)
        throw DomainError("bfs_distance: color out of range");
  ColoringSpace space = enumerate_proper(g, k, limits);
  auto from = space.index_of(c1), to = space.index_of(c2);
  if (!from || !to) throw InternalError("endpoint missing from state space");
  auto dist = reconfig_bfs(g, space, *from);
  if (dist[*to] == -1) return std::nullopt;
  return dist[*to];
}

bool reconfig_connected(const Graph& g, int k, const OracleLimits& limits) {
  ColoringSpace space = enumerate_proper(g, k, limits);
  if (space.count() == 0)
    throw DomainError("no proper coloring with k=" + std::to_string(k));
  auto dist = reconfig_bfs(g, space, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](long d) { return d == -1; });
}

long reconfig_diameter(const Graph& g, int k, const OracleLimits& limits) {
  ColoringSpace space = enumerate_proper(g, k, limits);
  if (space.count() == 0)
    throw DomainError("no proper coloring with k=" + std::to_string(k));
  long diameter = 0;
  for (std::size_t src = 0; src < space.count(); ++src) {
    auto dist = reconfig_bfs(g, space, src);
    for (long d : dist) {
      if (d == -1)
        throw DomainError("reconfiguration graph is disconnected");
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

}  // namespace recolor
