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

#include <cstdint>
#include <string>

#include "recolor/graph.hpp"

namespace recolor {

// splitmix64 (Steele, Lea, Flood: "Fast splittable pseudorandom number
// generators"). Fixed algorithm so instances reproduce across
// implementations: state += 0x9e3779b97f4a7c15, then two xor-shift-multiply
// rounds; below(n) = next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class GenModel { kKTree, kInterval, kPathPower, kPath };

GenModel parse_model(const std::string& name);
std::string model_name(GenModel model);

struct GenSpec {
  GenModel model = GenModel::kKTree;
  int n = 0;
  int omega = 2;       // target clique number (path power: omega = p+1)
  int max_degree = 8;  // degree cap
  std::uint64_t seed = 1;
};

struct GenResult {
  Graph graph;
  int omega = 0;
  int delta = 0;
  int degeneracy = 0;
};

// Seeded chordal instance; certified chordal via MCS before returning.
// Throws DomainError (InfeasibleSpec) when the caps cannot be met.
GenResult gen_graph(const GenSpec& spec);

// Randomized greedy coloring along the reverse elimination order with a
// random admissible color at each vertex; proper for every k >= omega.
Coloring gen_coloring(const Graph& g, int k, std::uint64_t seed);

}  // namespace recolor
