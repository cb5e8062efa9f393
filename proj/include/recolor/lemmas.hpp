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

#include <vector>

#include "recolor/buffer.hpp"

namespace recolor {

struct RecolorStep {
  int vertex = 0;
  int from = 0;
  int to = 0;
  bool operator==(const RecolorStep&) const = default;
};

// Per-(block, class) recoloring counts within one lemma invocation.
struct CoordCounter {
  int blocks = 0, omega = 0;
  std::vector<int> counts;
  int max_count = 0;
  int min_block = 0;  // smallest block touched, 0 when untouched

  void reset(const BufferParams& params);
  void bump(int block, int p);
};

// Shared state threaded through the lemma procedures. The graph/working
// pointers may be null for vector-only runs (all blocks empty).
struct RecolorCtx {
  const Graph* g = nullptr;
  const CanonicalClasses* classes = nullptr;
  const Buffer* buf = nullptr;
  VectorTuple* nu = nullptr;
  Coloring* working = nullptr;
  std::vector<RecolorStep>* steps = nullptr;
  CoordCounter* counter = nullptr;
  bool debug = false;

  const BufferParams& params() const { return buf->params; }
};

RegionKind ctx_region(const RecolorCtx& ctx, int j);

// Changes one coordinate of one block's vector and recolors the matching
// vertices. The new color must be absent from the block's vector.
void vector_change(RecolorCtx& ctx, int block, int p, int color);

// vector_change over a block range, skipping blocks already at the color.
void recolor_range(RecolorCtx& ctx, int block_lo, int block_hi, int p,
                   int color);

// Replaces the second temporary color of transposition region j.
void choose_temporary(RecolorCtx& ctx, int j, int z_new);

// Makes the temp set of transposition region j equal {z, zp}.
void set_region_temp_set(RecolorCtx& ctx, int j, int z, int zp);

// Makes class `cls` of transposition region j carry z and the other class
// carry zp.
void orient_region_temps(RecolorCtx& ctx, int j, int cls, int z, int zp);

// Makes region j's B vector equal target_b (equal regions up to swapped
// temporaries).
void match_region_b_vector(RecolorCtx& ctx, int j, const ColorVector& target_b);

// Recolors (B_i .. C_N, p) with `color`; case_id selects which hypothesis
// set is asserted (1: waiting region / fresh color, 2: color region / fresh
// color, 3: color region / disappearing color).
void create_cancel_color(RecolorCtx& ctx, int i, int p, int color,
                         int case_id);

// One border-error-decreasing pass on a valid buffer. Returns the new
// border error; result is almost valid.
int step1_decrease_border_error(RecolorCtx& ctx, const ColorVector& nu_c);

// R_i waiting + R_{i+1} transposition  ->  swapped kinds.
void transp_shift(RecolorCtx& ctx, int i);
// Mirror image.
void shift_transpo_right(RecolorCtx& ctx, int i);

// Cancels two transposition regions permuting the same color pair.
void transp_cancel(RecolorCtx& ctx, int i, int j);

// Almost valid -> valid, touching only R_2..R_s.
void step2_make_valid(RecolorCtx& ctx);

// Moves the color region at i to position j inside the color buffer.
void move_color_region(RecolorCtx& ctx, int i, int j);

// First 2*C(omega,2) regions of the transposition buffer become waiting.
void make_well_organized(RecolorCtx& ctx);

// Writes tau_{p,q} at both ends of an all-waiting span.
void insert_transposition(RecolorCtx& ctx, int t0, int t1, int p, int q);

// Writes program[j] at slots 2+j and 2*pairs+1-j (identity entries skipped).
void write_transposition_program(RecolorCtx& ctx,
                                 const std::vector<Transposition>& program);

// Pushes class a's involvement from slot i+1 into slot i. Returns true when
// the two regions cancelled into waiting regions.
bool switch_transpo(RecolorCtx& ctx, int i, int a);

// Product of tau over [t0, t1] is the identity -> all waiting.
void cancel_identity_segment(RecolorCtx& ctx, int t0, int t1);

// Makes every child tuple identical to the first child's ("reference").
// All children must be valid with border error 0 against the same clique
// vector.
void step3_unify(std::vector<RecolorCtx*>& children);

// Exposed for tests: color transposition product over regions [t0, t1],
// applying t0 first. Color c maps through each region's tau.
std::vector<int> tau_product(const RecolorCtx& ctx, int t0, int t1);

}  // namespace recolor
