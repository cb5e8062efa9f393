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

#include <algorithm>
#include <vector>

#include "recolor/buffer.hpp"
#include "recolor/graph.hpp"
#include "recolor/lemmas.hpp"

namespace recolor::testutil {

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Brute-force chordality for small n: a graph is chordal iff no vertex
// subset of size >= 4 induces a cycle (all degrees 2 and connected).
inline bool chordal_by_brute_force(const Graph& g) {
  const int n = g.num_vertices();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    if (verts.size() < 4) continue;
    bool all_degree_two = true;
    for (int v : verts) {
      int deg = 0;
      for (int u : verts)
        if (u != v && g.has_edge(u, v)) ++deg;
      if (deg != 2) {
        all_degree_two = false;
        break;
      }
    }
    if (!all_degree_two) continue;
    // Connected 2-regular induced subgraph = induced cycle.
    std::vector<int> stack{verts[0]};
    std::vector<char> seen(n, 0);
    seen[verts[0]] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int u : verts)
        if (!seen[u] && g.has_edge(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (reached == verts.size()) return false;
  }
  return true;
}

// Independent re-derivation of the validity properties, structured as a
// direct transcription of the definitions (no shared classification code:
// region shapes are matched by exhaustive search over classes and colors).
inline Validity naive_validity(const BufferParams& params,
                               const VectorTuple& nu) {
  const int omega = params.omega;
  auto is_waiting = [&](int j) {
    return nu.at(params.block_a(j)) == nu.at(params.block_b(j)) &&
           nu.at(params.block_b(j)) == nu.at(params.block_c(j));
  };
  auto color_shape = [&](int j, int* z_out) {
    const ColorVector &a = nu.at(params.block_a(j)),
                      &b = nu.at(params.block_b(j)),
                      &c = nu.at(params.block_c(j));
    for (int p = 1; p <= omega; ++p)
      for (int c1 = 1; c1 <= omega; ++c1)
        for (int z = omega + 1; z <= params.k; ++z) {
          if (a.at(p) != c1 || b.at(p) != z || c.at(p) != z) continue;
          bool others = true;
          for (int m = 1; m <= omega && others; ++m) {
            if (m == p) continue;
            if (a.at(m) != b.at(m) || b.at(m) != c.at(m)) others = false;
            if (a.at(m) == c1 || a.at(m) == z) others = false;
          }
          if (others) {
            if (z_out) *z_out = z;
            return true;
          }
        }
    return false;
  };
  auto transposition_shape = [&](int j, int* z_out, int* zp_out) {
    const ColorVector &a = nu.at(params.block_a(j)),
                      &b = nu.at(params.block_b(j)),
                      &c = nu.at(params.block_c(j));
    for (int p = 1; p <= omega; ++p)
      for (int q = 1; q <= omega; ++q) {
        if (p == q) continue;
        int c1 = a.at(p), c2 = a.at(q), z = b.at(p), zp = b.at(q);
        if (c1 > omega || c2 > omega || c1 == c2) continue;
        if (z <= omega || zp <= omega || z == zp) continue;
        if (c.at(p) != c2 || c.at(q) != c1) continue;
        bool others = true;
        for (int m = 1; m <= omega && others; ++m) {
          if (m == p || m == q) continue;
          if (a.at(m) != b.at(m) || b.at(m) != c.at(m)) others = false;
          if (a.at(m) > omega) others = false;
          if (a.at(m) == c1 || a.at(m) == c2) others = false;
        }
        if (others) {
          if (z_out) *z_out = z;
          if (zp_out) *zp_out = zp;
          return true;
        }
      }
    return false;
  };

  for (int b = 1; b <= params.blocks(); ++b)
    if (!nu.at(b).distinct_entries(params.k)) return Validity::kInvalid;
  for (int i = 1; i < params.big_n; ++i)
    if (!(nu.at(params.block_c(i)) == nu.at(params.block_a(i + 1))))
      return Validity::kInvalid;
  ColorVector canon = ColorVector::canonical(omega);
  if (!(nu.at(1) == canon && nu.at(2) == canon && nu.at(3) == canon))
    return Validity::kInvalid;
  int shared_z = 0, shared_zp = 0;
  for (int j = 2; j <= params.s - 1; ++j) {
    if (is_waiting(j)) continue;
    int z = 0, zp = 0;
    if (!transposition_shape(j, &z, &zp)) return Validity::kInvalid;
    int lo = std::min(z, zp), hi = std::max(z, zp);
    if (shared_z == 0) {
      shared_z = lo;
      shared_zp = hi;
    } else if (shared_z != lo || shared_zp != hi) {
      return Validity::kInvalid;
    }
  }
  for (int j = params.s + 1; j <= params.big_n - 1; ++j)
    if (!is_waiting(j) && !color_shape(j, nullptr)) return Validity::kInvalid;
  if (!is_waiting(params.big_n)) return Validity::kInvalid;
  if (is_waiting(params.s)) return Validity::kValid;
  if (transposition_shape(params.s, nullptr, nullptr))
    return Validity::kAlmostValid;
  return Validity::kInvalid;
}

// An empty buffer (no vertices) for vector-only lemma tests.
inline Buffer empty_buffer(const BufferParams& params) {
  Buffer buf;
  buf.params = params;
  buf.block_class.assign(params.blocks() + 1,
                         std::vector<std::vector<int>>(params.omega + 1));
  return buf;
}

struct VectorHarness {
  BufferParams params;
  Buffer buf;
  VectorTuple nu;
  std::vector<RecolorStep> steps;
  CoordCounter counter;

  explicit VectorHarness(const BufferParams& p, const VectorTuple& tuple)
      : params(p), buf(empty_buffer(p)), nu(tuple) {
    counter.reset(params);
  }

  RecolorCtx ctx() {
    RecolorCtx c;
    c.buf = &buf;
    c.nu = &nu;
    c.steps = &steps;
    c.counter = &counter;
    c.debug = true;
    return c;
  }
};

}  // namespace recolor::testutil
