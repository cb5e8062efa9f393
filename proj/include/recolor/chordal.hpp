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

#include <optional>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Perfect elimination ordering: order[i] is the vertex eliminated at
// position i, pos is the inverse permutation.
struct Peo {
  std::vector<int> order;
  std::vector<int> pos;
};

// Outcome of maximum cardinality search: either a verified PEO or a hole
// (induced cycle of length >= 4) witnessing non-chordality.
struct ChordalityResult {
  std::optional<Peo> peo;
  std::vector<int> hole;
  bool chordal() const { return peo.has_value(); }
};

// MCS with ties broken by smallest vertex id, followed by a mandatory
// verification pass over the candidate ordering.
ChordalityResult maximum_cardinality_search(const Graph& g);

// Literal definition check: every later neighborhood is a clique.
// Quadratic; used as the independent test predicate.
bool is_peo(const Graph& g, const std::vector<int>& order);

// Finds a hole in a non-chordal graph (throws InternalError if none found,
// which would mean the graph is chordal after all).
std::vector<int> find_hole(const Graph& g);

struct CanonicalClasses {
  Coloring c0;                            // vertex -> color in [1..omega]
  std::vector<std::vector<int>> classes;  // classes[p-1] = X_p, sorted
  int omega = 0;
};

// Greedy coloring along the reverse elimination order; uses exactly the
// colors 1..omega.
CanonicalClasses canonical_coloring(const Graph& g, const Peo& peo);

}  // namespace recolor
