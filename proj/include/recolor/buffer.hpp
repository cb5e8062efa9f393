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

#include <string>
#include <unordered_map>
#include <vector>

#include "recolor/chordal.hpp"
#include "recolor/clique_tree.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Derived quantities of the block decomposition. Blocks are indexed
// 1..3N with block 3N nearest the root clique; region j = blocks
// (3j-2, 3j-1, 3j) named (A_j, B_j, C_j), j in 1..N. Region 1 borders the
// canonical zone, region N borders the root clique.
struct BufferParams {
  int omega = 0;
  int delta = 0;
  int k = 0;
  int s = 0;          // 3*C(omega,2) + 2
  int big_n = 0;      // s + k - omega + 1
  int pairs = 0;      // C(omega,2)
  int depth = 0;      // 3 * delta * big_n

  BufferParams() = default;
  BufferParams(int omega_, int delta_, int k_);

  int blocks() const { return 3 * big_n; }
  int block_a(int j) const { return 3 * j - 2; }
  int block_b(int j) const { return 3 * j - 1; }
  int block_c(int j) const { return 3 * j; }
  int region_of(int block) const { return (block + 2) / 3; }
};

// A color vector: one distinct color per class, classes 1..omega.
class ColorVector {
 public:
  ColorVector() = default;
  explicit ColorVector(int omega) : entries_(omega, 0) {}
  static ColorVector canonical(int omega);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int p) const { return entries_[p - 1]; }
  void set(int p, int color) { entries_[p - 1] = color; }
  // 0 when the color is absent.
  int class_of(int color) const;
  bool contains(int color) const { return class_of(color) != 0; }
  void swap_coordinates(int p, int l);
  bool distinct_entries(int k) const;

  bool operator==(const ColorVector& other) const = default;

 private:
  std::vector<int> entries_;
};

struct RegionKind {
  enum Kind { kWaiting, kColor, kTransposition, kIrregular };
  Kind kind = kIrregular;
  // Color region: class_p changes c1 -> z.
  // Transposition: class_p goes c1 -> z -> c2, class_q goes c2 -> zp -> c1.
  int class_p = 0, class_q = 0;
  int c1 = 0, c2 = 0;
  int z = 0, zp = 0;
  std::string reason;

  bool waiting() const { return kind == kWaiting; }
  bool color() const { return kind == kColor; }
  bool transposition() const { return kind == kTransposition; }
};

RegionKind classify_region(const ColorVector& a, const ColorVector& b,
                           const ColorVector& c, int omega);

// One color vector per block; index 0 unused.
struct VectorTuple {
  std::vector<ColorVector> v;

  VectorTuple() = default;
  explicit VectorTuple(const BufferParams& params);

  ColorVector& at(int block) { return v[block]; }
  const ColorVector& at(int block) const { return v[block]; }
  const ColorVector& last() const { return v[v.size() - 1]; }

  bool operator==(const VectorTuple& other) const = default;
};

enum class Validity { kValid, kAlmostValid, kInvalid };

struct ValidityReport {
  Validity status = Validity::kInvalid;
  int property = 0;  // 1..5 (0 = malformed vector)
  int region = 0;
  std::string detail;

  bool valid() const { return status == Validity::kValid; }
  bool almost_valid() const { return status != Validity::kInvalid; }
};

ValidityReport check_validity(const BufferParams& params,
                              const VectorTuple& nu);

bool is_vectorially_proper(const VectorTuple& nu);

// Number of coordinates where the tuple's last vector disagrees with nu_c.
int border_error(const ColorVector& nu_c, const VectorTuple& nu);

// The vector associated with a clique: colors of the classes present in the
// bag, completed with the smallest unused colors in increasing class order.
ColorVector clique_vector(const std::vector<int>& bag, const Coloring& working,
                          const CanonicalClasses& classes, int k);

// A Valid tuple whose last vector equals target: the canonical-permutation
// part becomes transposition regions, the non-canonical substitutions
// become color regions.
VectorTuple construct_valid_tuple(const ColorVector& target,
                                  const BufferParams& params);

// Color transposition carried by a region of the transposition buffer.
struct Transposition {
  int color1 = 0, color2 = 0;  // color1 < color2 when non-identity
  bool is_id() const { return color1 == 0; }
  bool operator==(const Transposition&) const = default;
};

Transposition region_tau(const BufferParams& params, const VectorTuple& nu,
                         int j);

// Shared temporary colors of the transposition buffer's regions
// (omega+1, omega+2 when it holds none).
std::pair<int, int> buffer_temp_pair(const BufferParams& params,
                                     const VectorTuple& nu);

// Debug dump: one line per region, "R<j> <kind> A=<vec> B=<vec> C=<vec>".
std::string dump_tuple(const BufferParams& params, const VectorTuple& nu);

// Vertex-side decomposition below a clique: which vertices sit in which
// block, grouped by class.
struct Buffer {
  BufferParams params;
  int root_node = -1;  // -1 for virtual roots above the tree
  // member[v] = (block index, start height relative to the buffer root)
  std::unordered_map<int, std::pair<int, int>> member;
  std::vector<std::vector<std::vector<int>>> block_class;

  int block_of(int v) const {
    auto it = member.find(v);
    return it == member.end() ? 0 : it->second.first;
  }
  bool frontier(int v) const {
    auto it = member.find(v);
    return it != member.end() && (it->second.second + 1) % params.delta == 0;
  }
  const std::vector<int>& verts(int block, int p) const {
    return block_class[block][p];
  }
};

// Decomposition of the buffer rooted at a clique-tree node. `lift` shifts
// every start height upward; the engine uses it for the virtual iterations
// above the root.
Buffer decompose_buffer(const CliqueTree& t, int root_node,
                        const BufferParams& params,
                        const CanonicalClasses& classes);
Buffer lifted_buffer(const std::unordered_map<int, int>& root_starts, int lift,
                     const BufferParams& params,
                     const CanonicalClasses& classes);

// Classes whose R_N vertices have all neighbors inside R_{N-1} u R_N.
// Result indexed by class, entry 0 unused.
std::vector<char> internal_classes(const Buffer& buf, const Graph& g,
                                   const CanonicalClasses& classes);

// Test helpers for the structural invariants.
bool check_separation(const Buffer& buf, const Graph& g, std::string* why);
bool well_colored(const Buffer& buf, const VectorTuple& nu,
                  const Coloring& working, std::string* why);

}  // namespace recolor
