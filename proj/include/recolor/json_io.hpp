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

#include <iosfwd>
#include <string>

#include "recolor/engine.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Graph JSON: {"n": <int>, "edges": [[u,v],...]}, 0-based vertex ids.
Graph load_graph(const std::string& text);
std::string graph_to_json(const Graph& g);

// Coloring JSON: array of n integers, 1-based colors.
Coloring load_coloring(const std::string& text, int n);
std::string coloring_to_json(const Coloring& c);

// Sequence JSONL: one {"v":..,"from":..,"to":..} object per step, then a
// trailing metadata object.
void write_sequence_jsonl(std::ostream& out, const RecolorSequence& seq);

struct SequenceFile {
  std::vector<RecolorStep> steps;
  long length = -1;
  int max_per_vertex = -1;
  int omega = -1, delta = -1, k = -1;
};
SequenceFile read_sequence_jsonl(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace recolor
