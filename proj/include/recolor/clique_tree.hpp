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

#include <unordered_map>
#include <vector>

#include "recolor/chordal.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Rooted clique tree. Bags are the maximal cliques; node ids follow the
// order cliques are discovered by MCS, so node 0 is deterministic.
struct CliqueTree {
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<std::vector<int>> adj;   // tree adjacency between node ids
  std::vector<std::vector<int>> bags_of_vertex;

  // Filled by root_and_heights.
  int root = -1;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;  // ascending node ids
  std::vector<int> height;
  std::vector<std::vector<int>> height_table;  // height -> node ids
  std::vector<int> tin, tout;                  // subtree intervals

  int num_nodes() const { return static_cast<int>(bags.size()); }
  int max_height() const { return static_cast<int>(height_table.size()) - 1; }
  bool in_subtree(int node, int sub) const {
    return tin[sub] <= tin[node] && tout[node] <= tout[sub];
  }
};

// Builds the clique tree of a connected chordal graph from its MCS ordering
// and verifies the clique-tree conditions. Unrooted (root = -1).
CliqueTree build_clique_tree(const Graph& g, const Peo& peo);

void root_and_heights(CliqueTree& t, int root);

// Checks: bags are cliques of size <= omega, each vertex's bags form a
// connected nonempty subtree, and adjacent bags are incomparable.
// Throws InternalError on violation.
void validate_clique_tree(const Graph& g, const CliqueTree& t, int omega);

// Max height, relative to subtree_root, of a bag in that subtree containing
// v. Throws DomainError if v appears nowhere in the subtree.
int start_height(const CliqueTree& t, int subtree_root, int v);

// Start heights of every vertex appearing within `depth_limit` of sub.
// Exact for vertices whose start height is <= depth_limit - spread; here the
// caller passes the intended window plus the height spread.
std::unordered_map<int, int> subtree_start_heights(const CliqueTree& t,
                                                   int sub, int depth_limit);

}  // namespace recolor
