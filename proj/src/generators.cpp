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

#include "recolor/generators.hpp"

#include <algorithm>

#include "recolor/chordal.hpp"

namespace recolor {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

GenModel parse_model(const std::string& name) {
  if (name == "ktree") return GenModel::kKTree;
  if (name == "interval") return GenModel::kInterval;
  if (name == "pathpower") return GenModel::kPathPower;
  if (name == "path") return GenModel::kPath;
  throw ParseError("unknown generator model: " + name);
}

std::string model_name(GenModel model) {
  switch (model) {
    case GenModel::kKTree: return "ktree";
    case GenModel::kInterval: return "interval";
    case GenModel::kPathPower: return "pathpower";
    case GenModel::kPath: return "path";
  }
  return "?";
}

namespace {

// Random k-tree growth with a degree cap. A designated "spine" face (the
// omega-1 most recent spine vertices) is never offered to random
// attachments, so extending it stays possible whenever cap >= 2(omega-1):
// a spine vertex enters at degree omega-1 and receives at most omega-1
// further increments while in the window. Each new vertex either extends
// the spine or attaches to a random spine-free face within the cap.
std::vector<std::pair<int, int>> gen_ktree_edges(const GenSpec& spec) {
  const int w = spec.omega;
  const int cap = spec.max_degree;
  if (w < 2) throw DomainError("ktree model needs omega >= 2");
  if (spec.n < w) throw DomainError("ktree model needs n >= omega");
  if (cap < w - 1)
    throw DomainError("infeasible spec: max degree below omega - 1");
  SplitMix64 rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(spec.n, 0);
  std::vector<std::vector<int>> faces;
  std::vector<char> in_spine(spec.n, 0);
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      edges.emplace_back(a, b);
      ++degree[a];
      ++degree[b];
    }
  for (int skip = 0; skip < w; ++skip) {
    std::vector<int> face;
    for (int v = 0; v < w; ++v)
      if (v != skip) face.push_back(v);
    faces.push_back(face);
  }
  std::vector<int> spine;
  for (int v = 1; v < w; ++v) {
    spine.push_back(v);
    in_spine[v] = 1;
  }
  for (int v = w; v < spec.n; ++v) {
    std::vector<int> eligible;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      bool ok = true;
      for (int u : faces[f])
        if (degree[u] >= cap || in_spine[u]) {
          ok = false;
          break;
        }
      if (ok) eligible.push_back(static_cast<int>(f));
    }
    bool extend_spine = eligible.empty() || rng.below(2) == 0;
    std::vector<int> face;
    if (extend_spine) {
      for (int u : spine)
        if (degree[u] >= cap)
          throw DomainError(
              "infeasible spec: degree cap too tight at vertex " +
              std::to_string(v));
      face = spine;
      in_spine[spine.front()] = 0;
      spine.erase(spine.begin());
      spine.push_back(v);
      in_spine[v] = 1;
    } else {
      face = faces[eligible[rng.below(eligible.size())]];
    }
    for (int u : face) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
    for (std::size_t skip = 0; skip < face.size(); ++skip) {
      std::vector<int> next_face;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != skip) next_face.push_back(face[i]);
      next_face.push_back(v);
      faces.push_back(next_face);
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> gen_pathpower_edges(const GenSpec& spec) {
  const int p = spec.omega - 1;
  if (p < 1) throw DomainError("pathpower model needs omega >= 2");
  if (spec.n > p + 1 && spec.max_degree < 2 * p)
    throw DomainError("infeasible spec: path power needs max degree 2p");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < spec.n; ++v)
    for (int u = std::max(0, v - p); u < v; ++u) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> gen_interval_edges(const GenSpec& spec) {
  if (spec.omega < 1) throw DomainError("interval model needs omega >= 1");
  SplitMix64 rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(spec.n, 0);
  std::vector<int> active;
  int started = 0;
  while (started < spec.n || !active.empty()) {
    bool can_start = started < spec.n &&
                     static_cast<int>(active.size()) < spec.omega;
    if (can_start) {
      // Starting joins the new interval to every active one.
      if (static_cast<int>(active.size()) > spec.max_degree) can_start = false;
      for (int u : active)
        if (degree[u] >= spec.max_degree) can_start = false;
    }
    bool start = can_start && (active.empty() || rng.below(2) == 0);
    if (start) {
      int v = started++;
      for (int u : active) {
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
      }
      active.push_back(v);
    } else if (!active.empty()) {
      std::size_t idx = rng.below(active.size());
      active[idx] = active.back();
      active.pop_back();
    }
  }
  return edges;
}

}  // namespace

GenResult gen_graph(const GenSpec& spec) {
  if (spec.n < 1) throw DomainError("generator needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  GenSpec local = spec;
  switch (spec.model) {
    case GenModel::kKTree:
      edges = gen_ktree_edges(spec);
      break;
    case GenModel::kPath:
      local.omega = 2;
      edges = gen_pathpower_edges(local);
      break;
    case GenModel::kPathPower:
      edges = gen_pathpower_edges(spec);
      break;
    case GenModel::kInterval:
      edges = gen_interval_edges(spec);
      break;
  }
  GenResult result{Graph(spec.n, edges), 0, 0, 0};
  auto chordality = maximum_cardinality_search(result.graph);
  if (!chordality.chordal())
    throw InternalError("generated graph is not chordal");
  CanonicalClasses classes =
      canonical_coloring(result.graph, *chordality.peo);
  result.omega = classes.omega;
  result.delta = result.graph.max_degree();
  result.degeneracy = classes.omega - 1;
  if (result.delta > spec.max_degree)
    throw InternalError("generated graph exceeds the degree cap");
  return result;
}

Coloring gen_coloring(const Graph& g, int k, std::uint64_t seed) {
  auto chordality = maximum_cardinality_search(g);
  if (!chordality.chordal())
    throw DomainError("gen_coloring requires a chordal graph");
  const Peo& peo = *chordality.peo;
  SplitMix64 rng(seed);
  Coloring coloring(g.num_vertices(), 0);
  for (int i = g.num_vertices() - 1; i >= 0; --i) {
    int v = peo.order[i];
    std::vector<char> used(k + 1, 0);
    for (int u : g.neighbors(v))
      if (coloring[u] != 0) used[coloring[u]] = 1;
    std::vector<int> admissible;
    for (int c = 1; c <= k; ++c)
      if (!used[c]) admissible.push_back(c);
    if (admissible.empty())
      throw DomainError("gen_coloring: k below the clique number");
    coloring[v] = admissible[rng.below(admissible.size())];
  }
  return coloring;
}

}  // namespace recolor
