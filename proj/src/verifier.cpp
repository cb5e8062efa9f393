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

#include "recolor/verifier.hpp"

#include <algorithm>

namespace recolor {

VerifyReport verify_sequence(const Graph& g, const Coloring& start,
                             const std::vector<RecolorStep>& steps,
                             const Coloring& expected_end, int k) {
  VerifyReport report;
  report.length = steps.size();
  report.per_vertex_counts.assign(g.num_vertices(), 0);

  auto fail = [&](std::size_t index, const std::string& why) {
    report.ok = false;
    report.failure_index = index;
    report.failure_reason = why;
    return report;
  };

  if (static_cast<int>(start.size()) != g.num_vertices())
    return fail(0, "start coloring has wrong size");
  Coloring current = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const RecolorStep& st = steps[i];
    if (st.vertex < 0 || st.vertex >= g.num_vertices())
      return fail(i, "vertex out of range");
    if (st.to < 1 || st.to > k) return fail(i, "target color out of range");
    if (st.from == st.to) return fail(i, "step does not change the color");
    if (current[st.vertex] != st.from)
      return fail(i, "from-color does not match the current coloring");
    for (int u : g.neighbors(st.vertex))
      if (current[u] == st.to)
        return fail(i, "target color present in the neighborhood");
    current[st.vertex] = st.to;
    ++report.per_vertex_counts[st.vertex];
  }
  if (current != expected_end)
    return fail(steps.size(), "final coloring differs from the expected end");
  report.ok = true;
  report.max_per_vertex = report.per_vertex_counts.empty()
                              ? 0
                              : *std::max_element(
                                    report.per_vertex_counts.begin(),
                                    report.per_vertex_counts.end());
  return report;
}

std::pair<std::vector<int>, int> recolor_stats(
    const std::vector<RecolorStep>& steps, int n) {
  std::vector<int> counts(n, 0);
  int max_count = 0;
  for (const auto& st : steps)
    if (st.vertex >= 0 && st.vertex < n)
      max_count = std::max(max_count, ++counts[st.vertex]);
  return {counts, max_count};
}

}  // namespace recolor
