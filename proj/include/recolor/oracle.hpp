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

#include "recolor/graph.hpp"

namespace recolor {

struct OracleLimits {
  std::size_t state_cap = 5'000'000;  // max number of proper colorings
};

// Exact shortest recoloring distance in the k-reconfiguration graph, or
// nullopt when c1 and c2 lie in different components. Throws DomainError
// when the state space exceeds the cap.
std::optional<long> bfs_distance(const Graph& g, int k, const Coloring& c1,
                                 const Coloring& c2,
                                 const OracleLimits& limits = {});

// True iff the k-reconfiguration graph is connected. Throws DomainError
// when there is no proper k-coloring or the cap is exceeded.
bool reconfig_connected(const Graph& g, int k,
                        const OracleLimits& limits = {});

// Exact diameter via BFS from every proper coloring. Throws DomainError
// when disconnected or over the cap.
long reconfig_diameter(const Graph& g, int k, const OracleLimits& limits = {});

}  // namespace recolor
