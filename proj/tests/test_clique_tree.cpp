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

#include <algorithm>

#include "gtest/gtest.h"
#include "recolor/clique_tree.hpp"
#include "recolor/generators.hpp"
#include "testutil.hpp"

namespace recolor {
namespace {

using testutil::complete;
using testutil::path;

CliqueTree tree_of(const Graph& g, int omega_hint = 0) {
  auto result = maximum_cardinality_search(g);
  EXPECT_TRUE(result.chordal());
  CliqueTree t = build_clique_tree(g, *result.peo);
  CanonicalClasses classes = canonical_coloring(g, *result.peo);
  validate_clique_tree(g, t, omega_hint ? omega_hint : classes.omega);
  return t;
}

TEST(CliqueTree, SingleCliqueForK3) {
  CliqueTree t = tree_of(complete(3));
  ASSERT_EQ(t.num_nodes(), 1);
  EXPECT_EQ(t.bags[0], (std::vector<int>{0, 1, 2}));
}

TEST(CliqueTree, PathHasTwoBags) {
  CliqueTree t = tree_of(path(3));
  ASSERT_EQ(t.num_nodes(), 2);
  std::vector<std::vector<int>> bags = t.bags;
  std::sort(bags.begin(), bags.end());
  EXPECT_EQ(bags[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(bags[1], (std::vector<int>{1, 2}));
  EXPECT_EQ(t.adj[0].size(), 1u);
}

TEST(CliqueTree, RandomTwoTreesSatisfyInvariants) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenSpec spec{GenModel::kKTree, 50, 3, 9, seed};
    GenResult inst = gen_graph(spec);
    CliqueTree t = tree_of(inst.graph);  // validate_clique_tree throws on bugs
    for (const auto& bag : t.bags) EXPECT_EQ(bag.size(), 3u);
  }
}

TEST(RootAndHeights, SingleNode) {
  CliqueTree t = tree_of(complete(4));
  root_and_heights(t, 0);
  ASSERT_EQ(t.height_table.size(), 1u);
  EXPECT_EQ(t.height_table[0], (std::vector<int>{0}));
}

TEST(RootAndHeights, PathOfBags) {
  CliqueTree t = tree_of(path(4));  // bags {0,1},{1,2},{2,3} in a path
  ASSERT_EQ(t.num_nodes(), 3);
  // Root at a leaf of the tree: heights 0,1,2.
  int leaf = -1;
  for (int id = 0; id < 3; ++id)
    if (t.adj[id].size() == 1) leaf = id;
  root_and_heights(t, leaf);
  EXPECT_EQ(t.max_height(), 2);
  EXPECT_EQ(t.height[leaf], 0);
}

TEST(RootAndHeights, StarOfBags) {
  // Star K_{1,3}: bags {center, leaf_i} all sharing the center.
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  CliqueTree t = tree_of(g);
  ASSERT_EQ(t.num_nodes(), 3);
  root_and_heights(t, 0);
  EXPECT_EQ(static_cast<int>(t.height_table[0].size()), 1);
  for (int h = 1; h <= t.max_height(); ++h)
    for (int node : t.height_table[h]) EXPECT_EQ(t.height[node], h);
}

TEST(StartHeight, RootBagOnly) {
  CliqueTree t = tree_of(complete(3));
  root_and_heights(t, 0);
  EXPECT_EQ(start_height(t, 0, 0), 0);
}

TEST(StartHeight, MaxOverBags) {
  CliqueTree t = tree_of(path(5));  // path of 4 bags
  root_and_heights(t, 0);
  // Vertex 1's bags: {0,1} and {1,2}; its start height from the root is the
  // deeper of the two.
  int expected = -1;
  for (int id = 0; id < t.num_nodes(); ++id)
    if (std::binary_search(t.bags[id].begin(), t.bags[id].end(), 1))
      expected = std::max(expected, t.height[id]);
  EXPECT_EQ(start_height(t, t.root, 1), expected);
  EXPECT_THROW(start_height(t, t.height_table[1][0], /*leaf vertex*/ 0),
               DomainError);
}

TEST(StartHeight, ReRootingAtParentAddsOne) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec{GenModel::kKTree, 40, 3, 8, seed};
    GenResult inst = gen_graph(spec);
    auto result = maximum_cardinality_search(inst.graph);
    CliqueTree t = build_clique_tree(inst.graph, *result.peo);
    root_and_heights(t, 0);
    for (int node = 1; node < t.num_nodes(); ++node) {
      int parent = t.parent[node];
      // Vertices appearing under `node` but not in the parent bag have all
      // their bags inside the subtree, so re-rooting shifts by exactly one.
      auto starts = subtree_start_heights(t, node, t.max_height() + 1);
      for (auto [v, h] : starts) {
        if (std::binary_search(t.bags[parent].begin(), t.bags[parent].end(),
                               v))
          continue;
        bool only_below = true;
        for (int bag : t.bags_of_vertex[v])
          if (!t.in_subtree(bag, node)) only_below = false;
        if (!only_below) continue;
        EXPECT_EQ(start_height(t, parent, v), h + 1);
      }
    }
  }
}

TEST(HeightSpread, BoundedByMaxDegree) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GenSpec spec{GenModel::kKTree, 50, 4, 9, seed};
    GenResult inst = gen_graph(spec);
    auto result = maximum_cardinality_search(inst.graph);
    CliqueTree t = build_clique_tree(inst.graph, *result.peo);
    for (int root = 0; root < t.num_nodes(); root += 3) {
      root_and_heights(t, root);
      int delta = inst.graph.max_degree();
      for (int v = 0; v < inst.graph.num_vertices(); ++v) {
        int lo = t.num_nodes(), hi = -1;
        for (int bag : t.bags_of_vertex[v]) {
          lo = std::min(lo, t.height[bag]);
          hi = std::max(hi, t.height[bag]);
        }
        EXPECT_LE(hi - lo, delta) << "vertex " << v << " seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace recolor
