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

#include "recolor/lemmas.hpp"

#include <algorithm>
#include <string>

namespace recolor {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InternalError(what); }

void require(bool cond, const char* what) {
  if (!cond) fail(std::string("lemma hypothesis violated: ") + what);
}

// Smallest non-canonical color avoiding a and b (0 = no constraint).
int spare_noncanonical(const BufferParams& params, int a, int b) {
  for (int c = params.omega + 1; c <= params.k; ++c)
    if (c != a && c != b) return c;
  fail("no spare non-canonical color");
}

int find_color_region_for_class(const RecolorCtx& ctx, int p) {
  const BufferParams& params = ctx.params();
  for (int j = params.s + 1; j <= params.big_n - 1; ++j) {
    RegionKind kind = ctx_region(ctx, j);
    if (kind.color() && kind.class_p == p) return j;
  }
  return 0;
}

int find_waiting_in_color_buffer(const RecolorCtx& ctx) {
  const BufferParams& params = ctx.params();
  for (int j = params.s + 1; j <= params.big_n - 1; ++j)
    if (ctx_region(ctx, j).waiting()) return j;
  return 0;
}

void debug_check_status(RecolorCtx& ctx, Validity want, const char* where) {
  if (!ctx.debug) return;
  ValidityReport rep = check_validity(ctx.params(), *ctx.nu);
  bool ok = want == Validity::kValid   ? rep.valid()
            : want == Validity::kAlmostValid ? rep.almost_valid()
                                             : true;
  if (!ok)
    fail(std::string(where) + ": buffer not in expected state: " + rep.detail);
}

}  // namespace

void CoordCounter::reset(const BufferParams& params) {
  blocks = params.blocks();
  omega = params.omega;
  counts.assign(static_cast<std::size_t>(blocks + 1) * (omega + 1), 0);
  max_count = 0;
  min_block = 0;
}

void CoordCounter::bump(int block, int p) {
  int& c = counts[static_cast<std::size_t>(block) * (omega + 1) + p];
  ++c;
  max_count = std::max(max_count, c);
  if (min_block == 0 || block < min_block) min_block = block;
}

RegionKind ctx_region(const RecolorCtx& ctx, int j) {
  const BufferParams& params = ctx.params();
  return classify_region(ctx.nu->at(params.block_a(j)),
                         ctx.nu->at(params.block_b(j)),
                         ctx.nu->at(params.block_c(j)), params.omega);
}

void vector_change(RecolorCtx& ctx, int block, int p, int color) {
  const BufferParams& params = ctx.params();
  VectorTuple& nu = *ctx.nu;
  require(block >= 1 && block <= params.blocks(), "block out of range");
  require(p >= 1 && p <= params.omega, "class out of range");
  require(color >= 1 && color <= params.k, "color out of range");
  require(nu.at(block).at(p) != color, "vector_change to current color");
  require(!nu.at(block).contains(color), "color already in block vector");
  if (ctx.debug) {
    // The change must keep the vectorial coloring proper.
    for (int nb : {block - 1, block + 1}) {
      if (nb < 1 || nb > params.blocks()) continue;
      int cls = nu.at(nb).class_of(color);
      if (cls != 0 && cls != p)
        fail("vector_change breaks vectorial properness at block " +
             std::to_string(nb));
    }
  }
  if (ctx.counter) ctx.counter->bump(block, p);
  if (ctx.working) {
    for (int v : ctx.buf->verts(block, p)) {
      int from = (*ctx.working)[v];
      if (ctx.debug && ctx.g) {
        for (int u : ctx.g->neighbors(v))
          if ((*ctx.working)[u] == color)
            fail("improper vertex recoloring of " + std::to_string(v));
      }
      if (ctx.steps) ctx.steps->push_back({v, from, color});
      (*ctx.working)[v] = color;
    }
  }
  nu.at(block).set(p, color);
}

void recolor_range(RecolorCtx& ctx, int block_lo, int block_hi, int p,
                   int color) {
  for (int b = block_lo; b <= block_hi; ++b)
    if (ctx.nu->at(b).at(p) != color) vector_change(ctx, b, p, color);
}

void choose_temporary(RecolorCtx& ctx, int j, int z_new) {
  const BufferParams& params = ctx.params();
  RegionKind kind = ctx_region(ctx, j);
  require(kind.transposition(), "choose_temporary needs a transposition");
  require(z_new > params.omega, "temporary must be non-canonical");
  require(z_new != kind.z && z_new != kind.zp, "temporary already in use");
  vector_change(ctx, params.block_b(j), kind.class_q, z_new);
}

void set_region_temp_set(RecolorCtx& ctx, int j, int z, int zp) {
  const BufferParams& params = ctx.params();
  RegionKind kind = ctx_region(ctx, j);
  require(kind.transposition(), "set_region_temp_set needs a transposition");
  int cur_lo = std::min(kind.z, kind.zp), cur_hi = std::max(kind.z, kind.zp);
  int want_lo = std::min(z, zp), want_hi = std::max(z, zp);
  if (cur_lo == want_lo && cur_hi == want_hi) return;
  int bb = params.block_b(j);
  if (kind.z == want_lo || kind.z == want_hi) {
    vector_change(ctx, bb, kind.class_q,
                  kind.z == want_lo ? want_hi : want_lo);
  } else if (kind.zp == want_lo || kind.zp == want_hi) {
    vector_change(ctx, bb, kind.class_p,
                  kind.zp == want_lo ? want_hi : want_lo);
  } else {
    vector_change(ctx, bb, kind.class_p, want_lo);
    vector_change(ctx, bb, kind.class_q, want_hi);
  }
}

void orient_region_temps(RecolorCtx& ctx, int j, int cls, int z, int zp) {
  const BufferParams& params = ctx.params();
  RegionKind kind = ctx_region(ctx, j);
  require(kind.transposition(), "orient_region_temps needs a transposition");
  require(cls == kind.class_p || cls == kind.class_q, "class not in region");
  int other = cls == kind.class_p ? kind.class_q : kind.class_p;
  int bb = params.block_b(j);
  int cur_c = ctx.nu->at(bb).at(cls), cur_o = ctx.nu->at(bb).at(other);
  if (cur_c == z && cur_o == zp) return;
  if (cur_c == zp && cur_o == z) {
    int spare = spare_noncanonical(params, z, zp);
    vector_change(ctx, bb, cls, spare);
    vector_change(ctx, bb, other, zp);
    vector_change(ctx, bb, cls, z);
    return;
  }
  if (cur_o == z) {
    vector_change(ctx, bb, other, zp);
    vector_change(ctx, bb, cls, z);
    return;
  }
  if (cur_c == zp) {
    vector_change(ctx, bb, cls, z);
    vector_change(ctx, bb, other, zp);
    return;
  }
  if (cur_c != z) vector_change(ctx, bb, cls, z);
  if (ctx.nu->at(bb).at(other) != zp) vector_change(ctx, bb, other, zp);
}

void match_region_b_vector(RecolorCtx& ctx, int j,
                           const ColorVector& target_b) {
  const BufferParams& params = ctx.params();
  int bb = params.block_b(j);
  if (ctx.nu->at(bb) == target_b) return;
  RegionKind kind = ctx_region(ctx, j);
  require(kind.transposition(), "match_region_b_vector: unexpected kind");
  int p = kind.class_p, q = kind.class_q;
  require(ctx.nu->at(bb).at(p) == target_b.at(q) &&
              ctx.nu->at(bb).at(q) == target_b.at(p),
          "B vectors differ beyond swapped temporaries");
  int spare = spare_noncanonical(params, kind.z, kind.zp);
  vector_change(ctx, bb, p, spare);
  vector_change(ctx, bb, q, target_b.at(q));
  vector_change(ctx, bb, p, target_b.at(p));
}

void create_cancel_color(RecolorCtx& ctx, int i, int p, int color,
                         int case_id) {
  const BufferParams& params = ctx.params();
  require(i > params.s && i < params.big_n, "region outside color buffer");
  RegionKind kind = ctx_region(ctx, i);
  switch (case_id) {
    case 1:
      require(kind.waiting(), "case 1 needs a waiting region");
      require(color > params.omega, "case 1 needs a non-canonical color");
      require(find_color_region_for_class(ctx, p) == 0,
              "case 1: class already has a color region");
      break;
    case 2:
      require(kind.color() && kind.class_p == p,
              "case 2 needs a color region for the class");
      require(color > params.omega, "case 2 needs a non-canonical color");
      break;
    case 3:
      require(kind.color() && kind.class_p == p && kind.c1 == color,
              "case 3 needs the disappearing color");
      break;
    default:
      fail("unknown create_cancel_color case");
  }
  recolor_range(ctx, params.block_b(i), params.blocks(), p, color);
}

namespace {

// Case 4 of step 1: a class l != p carries the canonical color c on all of
// R_s..R_N.
void step1_case4(RecolorCtx& ctx, int p, int l, int c) {
  const BufferParams& params = ctx.params();
  VectorTuple& nu = *ctx.nu;
  const int s = params.s;
  int c1 = nu.at(params.block_a(s)).at(p);

  std::vector<char> present(params.k + 1, 0);
  for (int b = params.block_b(s); b <= params.blocks(); ++b)
    for (int q = 1; q <= params.omega; ++q) present[nu.at(b).at(q)] = 1;
  int y = 0;
  for (int col = 1; col <= params.k; ++col)
    if (!present[col]) {
      y = col;
      break;
    }

  auto [z, zp] = buffer_temp_pair(params, nu);
  if (y != 0) {
    // The temporaries are free choices; they must dodge the free color y.
    if (z == y || zp == y) {
      z = spare_noncanonical(params, y, 0);
      zp = spare_noncanonical(params, y, z);
    }
    vector_change(ctx, params.block_b(s), p, z);
    vector_change(ctx, params.block_b(s), l, zp);
    recolor_range(ctx, params.block_c(s), params.blocks(), l, y);
    recolor_range(ctx, params.block_c(s), params.blocks(), p, c);
    recolor_range(ctx, params.block_c(s), params.blocks(), l, c1);
    return;
  }
  // Every color appears: borrow the color region of a third class.
  int rq = 0;
  for (int j = s + 1; j <= params.big_n - 1 && rq == 0; ++j) {
    RegionKind kind = ctx_region(ctx, j);
    if (kind.color() && kind.class_p != p && kind.class_p != l) rq = j;
  }
  require(rq != 0, "step1 case 4: no third-class color region");
  RegionKind kq = ctx_region(ctx, rq);
  int q = kq.class_p;
  y = kq.c1;
  int zpp = kq.z;
  if (zpp == z || zpp == zp) {
    z = spare_noncanonical(params, zpp, 0);
    zp = spare_noncanonical(params, zpp, z);
  }
  recolor_range(ctx, params.block_b(s), params.block_a(rq), q, zpp);
  vector_change(ctx, params.block_b(s), p, z);
  vector_change(ctx, params.block_b(s), l, zp);
  recolor_range(ctx, params.block_c(s), params.blocks(), l, y);
  recolor_range(ctx, params.block_c(s), params.blocks(), p, c);
  recolor_range(ctx, params.block_c(s), params.blocks(), l, c1);
  recolor_range(ctx, params.block_b(s), params.block_a(rq), q, y);
}

// Case 5 of step 1: canonical c disappears in the color region rj for l.
void step1_case5(RecolorCtx& ctx, int p, int l, int c, int rj) {
  const BufferParams& params = ctx.params();
  VectorTuple& nu = *ctx.nu;
  const int s = params.s;
  RegionKind kind = ctx_region(ctx, rj);
  require(kind.color() && kind.class_p == l && kind.c1 == c,
          "step1 case 5: region shape");
  int z = kind.z;
  int zp = spare_noncanonical(params, z, 0);
  int c1 = nu.at(params.block_a(s)).at(p);
  recolor_range(ctx, params.block_b(s), params.block_a(rj), l, z);
  vector_change(ctx, params.block_b(s), p, zp);
  recolor_range(ctx, params.block_c(s), params.blocks(), p, c);
  recolor_range(ctx, params.block_c(s), params.block_a(rj), l, c1);
}

void step1_absent_color(RecolorCtx& ctx, int p, int c) {
  int jp = find_color_region_for_class(ctx, p);
  if (jp != 0) {
    create_cancel_color(ctx, jp, p, c, 2);
  } else {
    int iw = find_waiting_in_color_buffer(ctx);
    require(iw != 0, "no waiting region despite absent color");
    create_cancel_color(ctx, iw, p, c, 1);
  }
}

}  // namespace

int step1_decrease_border_error(RecolorCtx& ctx, const ColorVector& nu_c) {
  const BufferParams& params = ctx.params();
  VectorTuple& nu = *ctx.nu;
  debug_check_status(ctx, Validity::kValid, "step1 pre");
  int d_before = border_error(nu_c, nu);
  require(d_before > 0, "step1 needs positive border error");

  int p = 0;
  for (int q = 1; q <= params.omega; ++q)
    if (nu.last().at(q) != nu_c.at(q)) {
      p = q;
      break;
    }
  int c = nu_c.at(p);

  if (ctx.debug && ctx.g && ctx.classes) {
    auto internal = internal_classes(*ctx.buf, *ctx.g, *ctx.classes);
    if (!internal[p]) fail("step1: mismatched class is not internal");
  }

  // Locate the unique class carrying c on R_s..R_N, if any.
  int carrier = 0;
  for (int b = params.block_a(params.s); b <= params.blocks(); ++b) {
    int cls = nu.at(b).class_of(c);
    if (cls != 0) {
      require(carrier == 0 || carrier == cls, "two classes carry the color");
      carrier = cls;
    }
  }

  if (carrier == 0) {
    require(c > params.omega, "absent color must be non-canonical");
    step1_absent_color(ctx, p, c);
  } else if (carrier == p) {
    require(c <= params.omega, "case 2 color must be canonical");
    int ri = find_color_region_for_class(ctx, p);
    require(ri != 0 && ctx_region(ctx, ri).c1 == c, "case 2 region missing");
    create_cancel_color(ctx, ri, p, c, 3);
  } else {
    int l = carrier;
    if (c > params.omega) {
      // Case 3: cancel the color region where c appears, then reuse case 1/2.
      int rj = 0;
      for (int j = params.s + 1; j <= params.big_n - 1 && rj == 0; ++j) {
        RegionKind kind = ctx_region(ctx, j);
        if (kind.color() && kind.z == c) rj = j;
      }
      require(rj != 0, "case 3: appearing region missing");
      RegionKind kind = ctx_region(ctx, rj);
      require(kind.class_p == l, "case 3: carrier mismatch");
      create_cancel_color(ctx, rj, l, kind.c1, 3);
      debug_check_status(ctx, Validity::kValid, "step1 case 3 mid");
      step1_absent_color(ctx, p, c);
    } else {
      int rj = 0;
      for (int j = params.s + 1; j <= params.big_n - 1 && rj == 0; ++j) {
        RegionKind kind = ctx_region(ctx, j);
        if (kind.color() && kind.class_p == l && kind.c1 == c) rj = j;
      }
      if (rj == 0)
        step1_case4(ctx, p, l, c);
      else
        step1_case5(ctx, p, l, c, rj);
    }
  }

  int d_after = border_error(nu_c, nu);
  require(d_after < d_before, "step1 did not decrease the border error");
  debug_check_status(ctx, Validity::kAlmostValid, "step1 post");
  return d_after;
}

void transp_shift(RecolorCtx& ctx, int i) {
  const BufferParams& params = ctx.params();
  require(i >= 1 && i + 1 <= params.s, "transp_shift index range");
  RegionKind ri = ctx_region(ctx, i);
  RegionKind rj = ctx_region(ctx, i + 1);
  require(ri.waiting(), "transp_shift: R_i must be waiting");
  require(rj.transposition(), "transp_shift: R_{i+1} must be a transposition");
  int p = rj.class_p, q = rj.class_q;
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), p, rj.z);
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), q, rj.zp);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), p, rj.c2);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), q, rj.c1);
  if (ctx.debug) {
    require(ctx_region(ctx, i).transposition(), "transp_shift post R_i");
    require(ctx_region(ctx, i + 1).waiting(), "transp_shift post R_{i+1}");
  }
}

void shift_transpo_right(RecolorCtx& ctx, int i) {
  const BufferParams& params = ctx.params();
  require(i >= 1 && i + 1 <= params.s, "shift_transpo_right index range");
  RegionKind ri = ctx_region(ctx, i);
  RegionKind rj = ctx_region(ctx, i + 1);
  require(ri.transposition(), "shift_transpo_right: R_i kind");
  require(rj.waiting(), "shift_transpo_right: R_{i+1} kind");
  int p = ri.class_p, q = ri.class_q;
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), p, ri.z);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), q, ri.zp);
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), p, ri.c1);
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), q, ri.c2);
  if (ctx.debug) {
    require(ctx_region(ctx, i).waiting(), "shift_transpo_right post R_i");
    require(ctx_region(ctx, i + 1).transposition(),
            "shift_transpo_right post R_{i+1}");
  }
}

void transp_cancel(RecolorCtx& ctx, int i, int j) {
  const BufferParams& params = ctx.params();
  require(i < j, "transp_cancel: i < j required");
  RegionKind ri = ctx_region(ctx, i);
  RegionKind rj = ctx_region(ctx, j);
  require(ri.transposition() && rj.transposition(), "transp_cancel kinds");
  int c1 = ri.c1, c2 = ri.c2;
  require((std::min(rj.c1, rj.c2) == std::min(c1, c2)) &&
              (std::max(rj.c1, rj.c2) == std::max(c1, c2)),
          "transp_cancel: regions permute different color pairs");
  auto pair = buffer_temp_pair(params, *ctx.nu);
  int zpp = spare_noncanonical(params, pair.first, pair.second);

  std::vector<std::pair<int, int>> carriers1, carriers2;
  for (int b = params.block_c(i); b <= params.block_a(j); ++b) {
    int p1 = ctx.nu->at(b).class_of(c1);
    if (p1 != 0) carriers1.emplace_back(b, p1);
    int p2 = ctx.nu->at(b).class_of(c2);
    if (p2 != 0) carriers2.emplace_back(b, p2);
  }
  for (auto [b, p] : carriers1) vector_change(ctx, b, p, zpp);
  for (auto [b, p] : carriers2) vector_change(ctx, b, p, c1);
  for (auto [b, p] : carriers1) vector_change(ctx, b, p, c2);
  // B-block classes move to their (possibly updated) A values.
  for (int color : {c1, c2}) {
    for (int t : {i, j}) {
      const RegionKind& kind = t == i ? ri : rj;
      int cls = ctx.nu->at(params.block_a(t)).class_of(color);
      require(cls == kind.class_p || cls == kind.class_q,
              "transp_cancel: color carrier lost");
      vector_change(ctx, params.block_b(t), cls, color);
    }
  }
  if (ctx.debug) {
    require(ctx_region(ctx, i).waiting(), "transp_cancel post R_i");
    require(ctx_region(ctx, j).waiting(), "transp_cancel post R_j");
  }
}

void step2_make_valid(RecolorCtx& ctx) {
  const BufferParams& params = ctx.params();
  const int s = params.s;
  debug_check_status(ctx, Validity::kAlmostValid, "step2 pre");
  RegionKind rs = ctx_region(ctx, s);
  if (rs.waiting()) {
    debug_check_status(ctx, Validity::kValid, "step2 trivial");
    return;
  }
  require(rs.transposition(), "step2: R_s must be transposition or waiting");
  auto pair = buffer_temp_pair(params, *ctx.nu);
  set_region_temp_set(ctx, s, pair.first, pair.second);

  int w = 0;
  for (int j = s - 1; j >= 2; --j)
    if (ctx_region(ctx, j).waiting()) {
      w = j;
      break;
    }
  if (w == 0) {
    // All of R_2..R_{s-1} are transpositions: a color pair repeats.
    int ci = 0, cj = 0;
    for (int j = 3; j <= s - 1 && ci == 0; ++j) {
      Transposition tj = region_tau(params, *ctx.nu, j);
      for (int i = 2; i < j && ci == 0; ++i) {
        if (region_tau(params, *ctx.nu, i) == tj) {
          ci = i;
          cj = j;
        }
      }
    }
    require(ci != 0, "step2: pigeonhole pair not found");
    transp_cancel(ctx, ci, cj);
    w = cj;
  }
  for (int t = w; t <= s - 1; ++t) transp_shift(ctx, t);
  debug_check_status(ctx, Validity::kValid, "step2 post");
}

void move_color_region(RecolorCtx& ctx, int i, int j) {
  const BufferParams& params = ctx.params();
  const int s = params.s;
  require(i > s && i < params.big_n && j > s && j < params.big_n,
          "move_color_region: indices outside the color buffer");
  if (i == j) return;
  RegionKind ri = ctx_region(ctx, i);
  require(ri.color(), "move_color_region: source is not a color region");
  int p = ri.class_p, c = ri.c1, z = ri.z;
  RegionKind rj = ctx_region(ctx, j);
  if (rj.waiting()) {
    if (i < j)
      recolor_range(ctx, params.block_b(i), params.block_a(j), p, c);
    else
      recolor_range(ctx, params.block_b(j), params.block_a(i), p, z);
  } else {
    require(rj.color() && rj.class_p != p,
            "move_color_region: target holds the same class");
    int l = rj.class_p, cp = rj.c1, zp = rj.z;
    if (i < j) {
      recolor_range(ctx, params.block_b(i), params.block_a(j), l, zp);
      recolor_range(ctx, params.block_b(i), params.block_a(j), p, c);
    } else {
      recolor_range(ctx, params.block_b(j), params.block_a(i), p, z);
      recolor_range(ctx, params.block_b(j), params.block_a(i), l, cp);
    }
    if (ctx.debug) {
      RegionKind after_i = ctx_region(ctx, i);
      require(after_i.color() && after_i.class_p == l,
              "move_color_region: displaced region malformed");
    }
  }
  if (ctx.debug) {
    RegionKind after_j = ctx_region(ctx, j);
    require(after_j.color() && after_j.class_p == p && after_j.c1 == c &&
                after_j.z == z,
            "move_color_region: target region malformed");
  }
}

void make_well_organized(RecolorCtx& ctx) {
  const BufferParams& params = ctx.params();
  const int s = params.s;
  debug_check_status(ctx, Validity::kValid, "make_well_organized pre");
  // Cancel duplicates until at most C(omega,2) transpositions remain.
  for (;;) {
    int count = 0;
    for (int j = 2; j <= s - 1; ++j)
      if (!region_tau(params, *ctx.nu, j).is_id()) ++count;
    if (count <= params.pairs) break;
    int ci = 0, cj = 0;
    for (int j = 3; j <= s - 1 && ci == 0; ++j) {
      Transposition tj = region_tau(params, *ctx.nu, j);
      if (tj.is_id()) continue;
      for (int i = 2; i < j && ci == 0; ++i)
        if (region_tau(params, *ctx.nu, i) == tj) {
          ci = i;
          cj = j;
        }
    }
    require(ci != 0, "well_organized: duplicate pair not found");
    transp_cancel(ctx, ci, cj);
  }
  // Pack the remaining transpositions into the last C(omega,2) slots.
  for (int target = s - 1; target >= 2 * params.pairs + 2; --target) {
    if (!region_tau(params, *ctx.nu, target).is_id()) continue;
    int t = 0;
    for (int j = target - 1; j >= 2; --j)
      if (!region_tau(params, *ctx.nu, j).is_id()) {
        t = j;
        break;
      }
    if (t == 0) break;
    for (int u = t; u < target; ++u) shift_transpo_right(ctx, u);
  }
  if (ctx.debug) {
    for (int j = 2; j <= 2 * params.pairs + 1; ++j)
      require(ctx_region(ctx, j).waiting(), "well_organized post");
  }
  debug_check_status(ctx, Validity::kValid, "make_well_organized post");
}

void insert_transposition(RecolorCtx& ctx, int t0, int t1, int p, int q) {
  const BufferParams& params = ctx.params();
  require(2 <= t0 && t0 < t1 && t1 <= params.s - 1, "insert span range");
  require(p != q && p >= 1 && q <= params.omega, "insert classes");
  for (int j = t0; j <= t1; ++j)
    require(ctx_region(ctx, j).waiting(), "insert span must be waiting");
  auto [z, zp] = buffer_temp_pair(params, *ctx.nu);
  int c1 = ctx.nu->at(params.block_a(t0)).at(p);
  int c2 = ctx.nu->at(params.block_a(t0)).at(q);
  recolor_range(ctx, params.block_b(t0), params.block_b(t1), p, z);
  vector_change(ctx, params.block_b(t0), q, zp);
  vector_change(ctx, params.block_b(t1), q, zp);
  recolor_range(ctx, params.block_c(t0), params.block_a(t1), q, c1);
  recolor_range(ctx, params.block_c(t0), params.block_a(t1), p, c2);
  if (ctx.debug) {
    require(ctx_region(ctx, t0).transposition(), "insert post t0");
    require(ctx_region(ctx, t1).transposition(), "insert post t1");
    for (int j = t0 + 1; j < t1; ++j)
      require(ctx_region(ctx, j).waiting(), "insert post interior");
  }
}

void write_transposition_program(RecolorCtx& ctx,
                                 const std::vector<Transposition>& program) {
  const BufferParams& params = ctx.params();
  require(static_cast<int>(program.size()) <= params.pairs,
          "program longer than C(omega,2)");
  for (std::size_t j = 0; j < program.size(); ++j) {
    const Transposition& t = program[j];
    if (t.is_id()) continue;
    int t0 = 2 + static_cast<int>(j);
    int t1 = 2 * params.pairs + 1 - static_cast<int>(j);
    const ColorVector& a = ctx.nu->at(params.block_a(t0));
    int p = a.class_of(t.color1), q = a.class_of(t.color2);
    require(p != 0 && q != 0, "program colors missing from the buffer");
    insert_transposition(ctx, t0, t1, p, q);
  }
}

namespace {

// Case of exactly one shared class between tau_i and tau_{i+1}.
void switch_transpo_one_common(RecolorCtx& ctx, int i, int a, int common) {
  const BufferParams& params = ctx.params();
  RegionKind ri = ctx_region(ctx, i), rj = ctx_region(ctx, i + 1);
  int x = ri.class_p == common ? ri.class_q : ri.class_p;
  int y = rj.class_p == common ? rj.class_q : rj.class_p;
  require(a == common || a == y, "switch3: class a not in tau_{i+1}");
  auto [z, zp] = buffer_temp_pair(params, *ctx.nu);
  orient_region_temps(ctx, i, common, z, zp);
  orient_region_temps(ctx, i + 1, common, z, zp);
  const ColorVector a_i = ctx.nu->at(params.block_a(i));
  const ColorVector c_j = ctx.nu->at(params.block_c(i + 1));
  int b = a_i.class_of(c_j.at(a));
  require(b != 0 && b != a, "switch3: pivot class not found");
  int c = common ^ x ^ y ^ a ^ b;  // the remaining class of {common, x, y}
  int third = a == common ? c : a;
  int zpp = spare_noncanonical(params, z, zp);
  recolor_range(ctx, params.block_b(i), params.block_b(i + 1), common, zpp);
  recolor_range(ctx, params.block_b(i), params.block_b(i + 1), b, z);
  recolor_range(ctx, params.block_b(i), params.block_b(i + 1), third, zp);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), a, a_i.at(b));
  recolor_range(ctx, params.block_c(i), params.block_a(i + 1), b, a_i.at(a));
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), c, a_i.at(c));
  for (int t : {i, i + 1}) {
    RegionKind kind = ctx_region(ctx, t);
    require(kind.transposition(), "switch3: post kind");
    if (kind.z != zpp && kind.zp != zpp) continue;
    int cls = kind.z == zpp ? kind.class_p : kind.class_q;
    int other = kind.z == zpp ? kind.zp : kind.z;
    require(other == z || other == zp, "switch3: unexpected temporaries");
    vector_change(ctx, params.block_b(t), cls, other == z ? zp : z);
  }
}

// Disjoint supports: the two transpositions swap slots.
void switch_transpo_disjoint(RecolorCtx& ctx, int i, int a) {
  const BufferParams& params = ctx.params();
  RegionKind ri = ctx_region(ctx, i), rj = ctx_region(ctx, i + 1);
  int b = rj.class_p == a ? rj.class_q : rj.class_p;
  int ci_cls = std::min(ri.class_p, ri.class_q);
  int di_cls = std::max(ri.class_p, ri.class_q);
  auto [z, zp] = buffer_temp_pair(params, *ctx.nu);
  orient_region_temps(ctx, i, ci_cls, z, zp);
  orient_region_temps(ctx, i + 1, a, z, zp);
  const ColorVector a_i = ctx.nu->at(params.block_a(i));
  int c1 = a_i.at(a), c2 = a_i.at(b), c3 = a_i.at(ci_cls), c4 = a_i.at(di_cls);
  int zpp = spare_noncanonical(params, z, zp);
  recolor_range(ctx, params.block_b(i), params.block_b(i + 1), a, zpp);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), ci_cls, z);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), b, c1);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), di_cls, zp);
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), ci_cls, c3);
  recolor_range(ctx, params.block_b(i), params.block_a(i + 1), di_cls, c4);
  vector_change(ctx, params.block_b(i), b, z);
  recolor_range(ctx, params.block_c(i), params.block_b(i + 1), a, c2);
  vector_change(ctx, params.block_b(i), a, zp);
  if (ctx.debug) {
    RegionKind after_i = ctx_region(ctx, i);
    require(after_i.transposition() &&
                ((after_i.class_p == a && after_i.class_q == b) ||
                 (after_i.class_p == b && after_i.class_q == a)),
            "switch4: post R_i");
  }
}

}  // namespace

bool switch_transpo(RecolorCtx& ctx, int i, int a) {
  RegionKind rj = ctx_region(ctx, i + 1);
  require(rj.transposition(), "switch_transpo: R_{i+1} must be transposition");
  require(rj.class_p == a || rj.class_q == a,
          "switch_transpo: class a not permuted by tau_{i+1}");
  RegionKind ri = ctx_region(ctx, i);
  if (ri.waiting()) {
    transp_shift(ctx, i);
    return false;
  }
  require(ri.transposition(), "switch_transpo: R_i kind");
  bool share_p = ri.class_p == rj.class_p || ri.class_p == rj.class_q;
  bool share_q = ri.class_q == rj.class_p || ri.class_q == rj.class_q;
  if (share_p && share_q) {
    transp_cancel(ctx, i, i + 1);
    return true;
  }
  if (share_p || share_q) {
    int common = share_p ? ri.class_p : ri.class_q;
    switch_transpo_one_common(ctx, i, a, common);
  } else {
    switch_transpo_disjoint(ctx, i, a);
  }
  if (ctx.debug) {
    RegionKind after_j = ctx_region(ctx, i + 1);
    require(!after_j.transposition() ||
                (after_j.class_p != a && after_j.class_q != a),
            "switch_transpo: a still in tau_{i+1}");
    RegionKind after_i = ctx_region(ctx, i);
    require(after_i.transposition() &&
                (after_i.class_p == a || after_i.class_q == a),
            "switch_transpo: a not moved into tau_i");
  }
  return false;
}

std::vector<int> tau_product(const RecolorCtx& ctx, int t0, int t1) {
  const BufferParams& params = ctx.params();
  std::vector<int> perm(params.omega + 1);
  for (int c = 0; c <= params.omega; ++c) perm[c] = c;
  for (int j = t0; j <= t1; ++j) {
    Transposition t = region_tau(params, *ctx.nu, j);
    if (t.is_id()) continue;
    for (int c = 1; c <= params.omega; ++c) {
      if (perm[c] == t.color1)
        perm[c] = t.color2;
      else if (perm[c] == t.color2)
        perm[c] = t.color1;
    }
  }
  return perm;
}

void cancel_identity_segment(RecolorCtx& ctx, int t0, int t1) {
  const BufferParams& params = ctx.params();
  require(2 <= t0 && t0 < t1 && t1 <= params.s - 1, "cancel segment range");
  int guard = 0;
  for (;;) {
    if (++guard > 16 * (params.pairs + 1) * (t1 - t0 + 1))
      fail("cancel_identity_segment: no progress");
    if (ctx.debug) {
      auto perm = tau_product(ctx, t0, t1);
      for (int c = 1; c <= params.omega; ++c)
        require(perm[c] == c, "cancel segment: product is not the identity");
    }
    int r = 0;
    for (int j = t1; j >= t0; --j)
      if (!region_tau(params, *ctx.nu, j).is_id()) {
        r = j;
        break;
      }
    if (r == 0) return;
    require(r > t0, "cancel segment: single non-identity remains");
    RegionKind kr = ctx_region(ctx, r);
    int a = std::min(kr.class_p, kr.class_q);
    for (int i = r - 1;; --i) {
      require(i >= t0, "cancel segment: ran past the left end");
      if (switch_transpo(ctx, i, a)) break;
      // After a non-cancelling switch, class a moved into tau_i.
    }
  }
}

namespace {

void same_col_buf(RecolorCtx& kid, const RecolorCtx& ref) {
  const BufferParams& params = kid.params();
  const int s = params.s;
  for (int guard = 0; guard <= params.omega; ++guard) {
    int p = 0;
    const ColorVector& ref_cs = ref.nu->at(params.block_c(s));
    const ColorVector& kid_cs = kid.nu->at(params.block_c(s));
    for (int q = 1; q <= params.omega; ++q)
      if (kid_cs.at(q) != ref_cs.at(q)) {
        p = q;
        break;
      }
    if (p == 0) return;
    require(guard < params.omega, "same_col_buf: no progress");
    int c = ref_cs.at(p);
    int l = kid_cs.class_of(c);
    require(l != 0 && l != p, "same_col_buf: pivot class missing");
    int a = find_color_region_for_class(kid, p);
    require(a != 0, "same_col_buf: class p has no color region");
    move_color_region(kid, a, s + 1);
    int b = find_color_region_for_class(kid, l);
    require(b != 0 && b != s + 1, "same_col_buf: class l has no color region");
    move_color_region(kid, b, s + 2);
    int cp = kid.nu->at(params.block_c(s)).at(p);
    int z = kid.nu->at(params.block_b(s + 1)).at(p);
    int zp = kid.nu->at(params.block_b(s + 2)).at(l);
    // A non-canonical absent from R_s..R_{s+2}.
    std::vector<char> present(params.k + 1, 0);
    for (int bk = params.block_a(s); bk <= params.block_c(s + 2); ++bk)
      for (int q = 1; q <= params.omega; ++q)
        present[kid.nu->at(bk).at(q)] = 1;
    int zpp = 0;
    for (int col = params.omega + 1; col <= params.k; ++col)
      if (!present[col] && col != z && col != zp) {
        zpp = col;
        break;
      }
    require(zpp != 0, "same_col_buf: no free non-canonical color");
    recolor_range(kid, params.block_b(s), params.block_a(s + 2), l, zpp);
    vector_change(kid, params.block_b(s), p, zp);
    recolor_range(kid, params.block_c(s), params.block_a(s + 1), p, c);
    recolor_range(kid, params.block_c(s), params.block_a(s + 2), l, cp);
    auto pair = buffer_temp_pair(params, *kid.nu);
    set_region_temp_set(kid, s, pair.first, pair.second);
    step2_make_valid(kid);
  }
}

void align_color_positions(RecolorCtx& kid, const RecolorCtx& ref) {
  const BufferParams& params = kid.params();
  for (int j = params.s + 1; j <= params.big_n - 1; ++j) {
    RegionKind rk = ctx_region(ref, j);
    RegionKind kk = ctx_region(kid, j);
    if (rk.waiting() && kk.waiting()) continue;
    if (rk.color() && kk.color() && rk.class_p == kk.class_p &&
        rk.c1 == kk.c1 && rk.z == kk.z)
      continue;
    if (rk.waiting()) {
      require(kk.color(), "align: unexpected kid region");
      int jw = 0;
      for (int t = j + 1; t <= params.big_n - 1 && jw == 0; ++t)
        if (ctx_region(kid, t).waiting()) jw = t;
      require(jw != 0, "align: no waiting slot to move into");
      move_color_region(kid, j, jw);
    } else {
      require(rk.color(), "align: unexpected ref region");
      int a = find_color_region_for_class(kid, rk.class_p);
      require(a > j, "align: kid color region not found above");
      move_color_region(kid, a, j);
    }
  }
  for (int b = params.block_a(params.s); b <= params.blocks(); ++b)
    require(kid.nu->at(b) == ref.nu->at(b),
            "align: color buffers still differ");
}

}  // namespace

void step3_unify(std::vector<RecolorCtx*>& children) {
  if (children.size() <= 1) return;
  const BufferParams& params = children[0]->params();
  const int gz = params.omega + 1, gzp = params.omega + 2;
  for (RecolorCtx* kid : children) {
    debug_check_status(*kid, Validity::kValid, "step3 pre");
    for (int j = 2; j <= params.s - 1; ++j)
      if (ctx_region(*kid, j).transposition())
        set_region_temp_set(*kid, j, gz, gzp);
  }
  RecolorCtx& ref = *children[0];
  for (std::size_t i = 1; i < children.size(); ++i) {
    same_col_buf(*children[i], ref);
    align_color_positions(*children[i], ref);
  }
  for (RecolorCtx* kid : children) make_well_organized(*kid);
  std::vector<Transposition> program;
  for (int j = 2 * params.pairs + 2; j <= params.s - 1; ++j)
    program.push_back(region_tau(params, *ref.nu, j));
  for (std::size_t i = 1; i < children.size(); ++i) {
    RecolorCtx& kid = *children[i];
    write_transposition_program(kid, program);
    if (params.pairs >= 1)
      cancel_identity_segment(kid, params.pairs + 2, params.s - 1);
    for (int j = params.pairs - 1; j >= 0; --j) {
      int src = 2 + j, dst = 2 * params.pairs + 2 + j;
      if (region_tau(params, *kid.nu, src).is_id()) continue;
      for (int u = src; u < dst; ++u) shift_transpo_right(kid, u);
    }
    for (int j = 2; j <= params.s - 1; ++j)
      if (ctx_region(kid, j).transposition())
        match_region_b_vector(kid, j, ref.nu->at(params.block_b(j)));
    if (!(*kid.nu == *ref.nu)) fail("step3: tuples still differ");
    debug_check_status(kid, Validity::kValid, "step3 post");
  }
}

}  // namespace recolor
