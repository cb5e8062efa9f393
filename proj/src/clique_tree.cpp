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

#include "recolor/clique_tree.hpp"

#include <algorithm>
#include <deque>

namespace recolor {

CliqueTree build_clique_tree(const Graph& g, const Peo& peo) {
  const int n = g.num_vertices();
  CliqueTree t;
  if (n == 0) return t;

  // MCS-based construction: walk the visit order (reverse PEO); a vertex
  // whose visited neighborhood does not grow the running clique starts a
  // new bag, attached at the bag of its most recently visited neighbor.
  std::vector<int> clique_of(n, -1);
  std::vector<std::pair<int, int>> tree_edges;
  int last_card = -1;
  for (int j = n - 1; j >= 0; --j) {
    int x = peo.order[j];
    std::vector<int> prev_nb;  // already visited = later in the PEO
    for (int w : g.neighbors(x))
      if (peo.pos[w] > j) prev_nb.push_back(w);
    int card = static_cast<int>(prev_nb.size());
    if (t.bags.empty() || card <= last_card) {
      int id = t.num_nodes();
      t.bags.push_back(prev_nb);
      t.bags.back().push_back(x);
      if (!prev_nb.empty()) {
        int latest = prev_nb[0];  // smallest PEO position = visited last
        for (int w : prev_nb)
          if (peo.pos[w] < peo.pos[latest]) latest = w;
        tree_edges.emplace_back(id, clique_of[latest]);
      }
      clique_of[x] = id;
    } else {
      t.bags[t.num_nodes() - 1].push_back(x);
      clique_of[x] = t.num_nodes() - 1;
    }
    last_card = card;
  }

  t.adj.assign(t.num_nodes(), {});
  for (auto [a, b] : tree_edges) {
    t.adj[a].push_back(b);
    t.adj[b].push_back(a);
  }
  for (auto& bag : t.bags) std::sort(bag.begin(), bag.end());
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  t.bags_of_vertex.assign(n, {});
  for (int id = 0; id < t.num_nodes(); ++id)
    for (int v : t.bags[id]) t.bags_of_vertex[v].push_back(id);
  return t;
}

void root_and_heights(CliqueTree& t, int root) {
  const int q = t.num_nodes();
  t.root = root;
  t.parent.assign(q, -1);
  t.children.assign(q, {});
  t.height.assign(q, -1);
  t.height_table.clear();
  t.tin.assign(q, 0);
  t.tout.assign(q, 0);

  std::deque<int> queue{root};
  t.height[root] = 0;
  std::vector<int> bfs_order;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    bfs_order.push_back(c);
    if (t.height[c] >= static_cast<int>(t.height_table.size()))
      t.height_table.resize(t.height[c] + 1);
    t.height_table[t.height[c]].push_back(c);
    for (int w : t.adj[c]) {
      if (t.height[w] != -1) continue;
      t.height[w] = t.height[c] + 1;
      t.parent[w] = c;
      t.children[c].push_back(w);
      queue.push_back(w);
    }
  }
  if (static_cast<int>(bfs_order.size()) != q)
    throw InternalError("clique tree is not connected");

  // Subtree intervals via iterative DFS.
  int timer = 0;
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == 0) t.tin[node] = timer++;
    if (next < static_cast<int>(t.children[node].size())) {
      int child = t.children[node][next++];
      stack.emplace_back(child, 0);
    } else {
      t.tout[node] = timer++;
      stack.pop_back();
    }
  }
}

void validate_clique_tree(const Graph& g, const CliqueTree& t, int omega) {
  const int q = t.num_nodes();
  for (int id = 0; id < q; ++id) {
    const auto& bag = t.bags[id];
    if (static_cast<int>(bag.size()) > omega)
      throw InternalError("bag larger than omega");
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j)
        if (!g.has_edge(bag[i], bag[j]))
          throw InternalError("bag is not a clique");
  }
  for (int id = 0; id < q; ++id) {
    for (int w : t.adj[id]) {
      if (w < id) continue;
      bool a_minus_b = false, b_minus_a = false;
      for (int v : t.bags[id])
        if (!std::binary_search(t.bags[w].begin(), t.bags[w].end(), v))
          a_minus_b = true;
      for (int v : t.bags[w])
        if (!std::binary_search(t.bags[id].begin(), t.bags[id].end(), v))
          b_minus_a = true;
      if (!a_minus_b || !b_minus_a)
        throw InternalError("adjacent bags are comparable");
    }
  }
  // Vertex subtrees: the bags containing v must be connected in t.
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& bags = t.bags_of_vertex[v];
    if (bags.empty()) throw InternalError("vertex missing from every bag");
    std::vector<char> in_set(q, 0), seen(q, 0);
    for (int id : bags) in_set[id] = 1;
    std::deque<int> queue{bags[0]};
    seen[bags[0]] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      ++reached;
      for (int w : t.adj[c])
        if (in_set[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    if (reached != bags.size())
      throw InternalError("vertex bags do not form a subtree");
  }
}

int start_height(const CliqueTree& t, int subtree_root, int v) {
  int best = -1;
  for (int id : t.bags_of_vertex[v])
    if (t.in_subtree(id, subtree_root))
      best = std::max(best, t.height[id] - t.height[subtree_root]);
  if (best < 0)
    throw DomainError("vertex " + std::to_string(v) + " not in subtree");
  return best;
}

std::unordered_map<int, int> subtree_start_heights(const CliqueTree& t,
                                                   int sub, int depth_limit) {
  std::unordered_map<int, int> start;
  std::deque<std::pair<int, int>> queue{{sub, 0}};
  while (!queue.empty()) {
    auto [node, rel] = queue.front();
    queue.pop_front();
    for (int v : t.bags[node]) {
      auto it = start.find(v);
      if (it == start.end())
        start.emplace(v, rel);
      else
        it->second = std::max(it->second, rel);
    }
    if (rel < depth_limit)
      for (int child : t.children[node]) queue.emplace_back(child, rel + 1);
  }
  return start;
}

}  // namespace recolor
