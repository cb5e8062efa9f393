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

#include <sstream>

#include "gtest/gtest.h"
#include "recolor/json_io.hpp"
#include "recolor/verifier.hpp"
#include "testutil.hpp"

namespace recolor {
namespace {

using testutil::path;

TEST(Verifier, EmptySequenceOk) {
  Graph g = path(3);
  Coloring c = {1, 2, 1};
  VerifyReport rep = verify_sequence(g, c, {}, c, 3);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.length, 0u);
  EXPECT_EQ(rep.max_per_vertex, 0);
}

TEST(Verifier, NeighborConflictRejected) {
  Graph g = path(3);
  Coloring c = {1, 2, 1};
  std::vector<RecolorStep> steps{{0, 1, 2}};
  VerifyReport rep = verify_sequence(g, c, steps, c, 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(*rep.failure_index, 0u);
}

TEST(Verifier, FromColorMismatchRejected) {
  Graph g = path(3);
  Coloring c = {1, 2, 1};
  std::vector<RecolorStep> steps{{0, 3, 1}};
  VerifyReport rep = verify_sequence(g, c, steps, c, 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.failure_reason,
            "from-color does not match the current coloring");
}

TEST(Verifier, WrongEndpointRejected) {
  Graph g = path(3);
  Coloring start = {1, 2, 1};
  Coloring end = {3, 2, 1};
  VerifyReport rep = verify_sequence(g, start, {}, end, 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(*rep.failure_index, 0u);
}

TEST(Verifier, ColorOutOfRangeRejected) {
  Graph g = path(2);
  Coloring c = {1, 2};
  std::vector<RecolorStep> steps{{0, 1, 4}};
  VerifyReport rep = verify_sequence(g, c, steps, c, 3);
  EXPECT_FALSE(rep.ok);
}

TEST(Verifier, CountsPerVertex) {
  Graph g(1, {});
  Coloring start = {1};
  std::vector<RecolorStep> steps{{0, 1, 2}, {0, 2, 1}};
  VerifyReport rep = verify_sequence(g, start, steps, start, 3);
  ASSERT_TRUE(rep.ok);
  EXPECT_EQ(rep.per_vertex_counts[0], 2);
  EXPECT_EQ(rep.max_per_vertex, 2);
  auto [counts, max_count] = recolor_stats(steps, 1);
  EXPECT_EQ(counts[0], 2);
  EXPECT_EQ(max_count, 2);
}

TEST(SequenceJsonl, RoundTrip) {
  RecolorSequence seq;
  seq.steps = {{0, 1, 2}, {3, 2, 5}};
  seq.start = {1, 1, 1, 2};
  seq.end = {2, 1, 1, 5};
  seq.omega = 2;
  seq.delta = 1;
  seq.k = 5;
  seq.max_per_vertex = 1;
  std::stringstream buf;
  write_sequence_jsonl(buf, seq);
  SequenceFile file = read_sequence_jsonl(buf);
  EXPECT_EQ(file.steps, seq.steps);
  EXPECT_EQ(file.length, 2);
  EXPECT_EQ(file.max_per_vertex, 1);
  EXPECT_EQ(file.omega, 2);
  EXPECT_EQ(file.k, 5);
}

}  // namespace
}  // namespace recolor
