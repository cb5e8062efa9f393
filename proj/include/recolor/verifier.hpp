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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/lemmas.hpp"

namespace recolor {

struct VerifyReport {
  bool ok = false;
  std::optional<std::size_t> failure_index;
  std::string failure_reason;
  std::size_t length = 0;
  std::vector<int> per_vertex_counts;
  int max_per_vertex = 0;
};

// Replays the sequence from `start`: every step's from-color must match,
// the target color must be free among the neighbors and within [1..k], and
// the final coloring must equal expected_end. Independent of the engine:
// only the adjacency lists are consulted.
VerifyReport verify_sequence(const Graph& g, const Coloring& start,
                             const std::vector<RecolorStep>& steps,
                             const Coloring& expected_end, int k);

// Exact per-vertex recoloring counts and their maximum.
std::pair<std::vector<int>, int> recolor_stats(
    const std::vector<RecolorStep>& steps, int n);

}  // namespace recolor
