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

#include "recolor/engine.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace recolor {

void BudgetStats::merge(const BudgetStats& other) {
  step1_calls += other.step1_calls;
  step1_max_coord = std::max(step1_max_coord, other.step1_max_coord);
  step2_calls += other.step2_calls;
  step2_max_coord = std::max(step2_max_coord, other.step2_max_coord);
  step3_calls += other.step3_calls;
  step3_max_coord = std::max(step3_max_coord, other.step3_max_coord);
  step4_calls += other.step4_calls;
  step4_max_vertex = std::max(step4_max_vertex, other.step4_max_vertex);
}

namespace {

// Runs the buffer sweep on one connected component (local vertex ids).
class ComponentRun {
 public:
  ComponentRun(const Graph& g, const Peo& peo, const CanonicalClasses& classes,
               int k, const EngineOptions& opts, BudgetStats* budgets)
      : g_(g),
        classes_(classes),
        opts_(opts),
        budgets_(budgets),
        params_(classes.omega, g.max_degree(), k) {
    tree_ = build_clique_tree(g_, peo);
    validate_clique_tree(g_, tree_, classes_.omega);
    root_and_heights(tree_, 0);
    tuples_.assign(tree_.num_nodes(), std::nullopt);
  }

  void run(Coloring& working, std::vector<RecolorStep>& steps) {
    working_ = &working;
    steps_ = &steps;
    for (int h = tree_.max_height(); h >= 0; --h)
      for (int node : tree_.height_table[h]) treat(node);
    virtual_extension();
    for (int v = 0; v < g_.num_vertices(); ++v)
      if (working[v] != classes_.c0[v])
        throw InternalError("vertex not canonical after the sweep");
  }

 private:
  RecolorCtx make_ctx(const Buffer& buf, VectorTuple& nu, CoordCounter* cnt) {
    RecolorCtx ctx;
    ctx.g = &g_;
    ctx.classes = &classes_;
    ctx.buf = &buf;
    ctx.nu = &nu;
    ctx.working = working_;
    ctx.steps = steps_;
    ctx.counter = cnt;
    ctx.debug = opts_.debug;
    return ctx;
  }

  // Reduces the border error to zero with alternating step1/step2 passes.
  void drive_border_to_zero(RecolorCtx& ctx, const ColorVector& nu_c) {
    for (;;) {
      int d = border_error(nu_c, *ctx.nu);
      if (d == 0) break;
      if (ctx.counter) ctx.counter->reset(params_);
      int d_after = step1_decrease_border_error(ctx, nu_c);
      if (budgets_ && ctx.counter) {
        ++budgets_->step1_calls;
        budgets_->step1_max_coord =
            std::max(budgets_->step1_max_coord, ctx.counter->max_count);
        if (ctx.counter->min_block != 0 &&
            ctx.counter->min_block < params_.block_a(params_.s))
          throw InternalError("step1 recolored below R_s");
      }
      if (d_after >= d) throw InternalError("border error did not decrease");
      if (ctx.counter) ctx.counter->reset(params_);
      step2_make_valid(ctx);
      if (budgets_ && ctx.counter) {
        ++budgets_->step2_calls;
        budgets_->step2_max_coord =
            std::max(budgets_->step2_max_coord, ctx.counter->max_count);
      }
    }
  }

  void step4_shift(const std::vector<const Buffer*>& bufs,
                   const VectorTuple& nu, std::size_t steps_before) {
    for (int j = params_.big_n - 1; j >= 2; --j) {
      RegionKind kind =
          classify_region(nu.at(params_.block_a(j)), nu.at(params_.block_b(j)),
                          nu.at(params_.block_c(j)), params_.omega);
      if (kind.waiting()) continue;
      for (const Buffer* buf_ptr : bufs) {
        const Buffer& buf = *buf_ptr;
        if (kind.color()) {
          recolor_frontier(buf, params_.block_b(j), kind.class_p, kind.c1);
        } else if (kind.transposition()) {
          recolor_frontier(buf, params_.block_c(j), kind.class_p, kind.z);
          recolor_frontier(buf, params_.block_c(j), kind.class_q, kind.zp);
          recolor_frontier(buf, params_.block_b(j), kind.class_p, kind.c1);
          recolor_frontier(buf, params_.block_b(j), kind.class_q, kind.c2);
        } else {
          throw InternalError("step4 met an irregular region");
        }
      }
    }
    if (budgets_) {
      ++budgets_->step4_calls;
      std::vector<int> counts(g_.num_vertices(), 0);
      for (std::size_t i = steps_before; i < steps_->size(); ++i) {
        int c = ++counts[(*steps_)[i].vertex];
        budgets_->step4_max_vertex = std::max(budgets_->step4_max_vertex, c);
      }
    }
  }

  void recolor_frontier(const Buffer& buf, int block, int cls, int color) {
    for (int v : buf.verts(block, cls)) {
      if (!buf.frontier(v)) continue;
      int from = (*working_)[v];
      if (from == color) throw InternalError("frontier vertex already moved");
      if (opts_.debug) {
        for (int u : g_.neighbors(v))
          if ((*working_)[u] == color)
            throw InternalError("improper frontier recoloring");
      }
      steps_->push_back({v, from, color});
      (*working_)[v] = color;
    }
  }

  void treat(int node) {
    const auto& kids = tree_.children[node];
    if (kids.empty()) {
      ColorVector target =
          clique_vector(tree_.bags[node], *working_, classes_, params_.k);
      tuples_[node] = construct_valid_tuple(target, params_);
      return;
    }
    ColorVector nu_c =
        clique_vector(tree_.bags[node], *working_, classes_, params_.k);
    std::vector<Buffer> bufs;
    bufs.reserve(kids.size());
    for (int kid : kids) {
      if (!tuples_[kid])
        throw InternalError("child treated without a stored tuple");
      bufs.push_back(decompose_buffer(tree_, kid, params_, classes_));
    }
    std::vector<CoordCounter> counters(kids.size());
    std::vector<RecolorCtx> ctxs;
    ctxs.reserve(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i)
      ctxs.push_back(make_ctx(bufs[i], *tuples_[kids[i]],
                              budgets_ ? &counters[i] : nullptr));

    for (auto& ctx : ctxs) drive_border_to_zero(ctx, nu_c);

    if (ctxs.size() > 1) {
      std::vector<RecolorCtx*> kid_ptrs;
      for (auto& ctx : ctxs) {
        if (ctx.counter) ctx.counter->reset(params_);
        kid_ptrs.push_back(&ctx);
      }
      step3_unify(kid_ptrs);
      if (budgets_) {
        ++budgets_->step3_calls;
        for (auto& ctx : ctxs)
          budgets_->step3_max_coord =
              std::max(budgets_->step3_max_coord, ctx.counter->max_count);
      }
    }

    std::size_t before = steps_->size();
    const VectorTuple& nu = *ctxs[0].nu;
    std::vector<const Buffer*> buf_ptrs;
    for (const Buffer& b : bufs) buf_ptrs.push_back(&b);
    step4_shift(buf_ptrs, nu, before);
    tuples_[node] = std::move(*tuples_[kids[0]]);
    for (int kid : kids) tuples_[kid].reset();

    if (opts_.debug) check_treated(node, *tuples_[node], nu_c);
  }

  void check_treated(int node, const VectorTuple& nu,
                     const ColorVector& nu_c) {
    Buffer buf = decompose_buffer(tree_, node, params_, classes_);
    std::string why;
    if (!well_colored(buf, nu, *working_, &why))
      throw InternalError("treated buffer is not well-colored: " + why);
    if (!check_validity(params_, nu).valid())
      throw InternalError("treated buffer tuple is not valid");
    if (border_error(nu_c, nu) != 0)
      throw InternalError("treated buffer has nonzero border error");
    if (!check_separation(buf, g_, &why))
      throw InternalError("separation violated: " + why);
  }

  // Iterations above the root with empty virtual cliques: the buffer window
  // is lifted one level at a time until every vertex has left it.
  void virtual_extension() {
    auto root_starts =
        subtree_start_heights(tree_, 0, tree_.max_height() + 1);
    VectorTuple nu = std::move(*tuples_[0]);
    tuples_[0].reset();
    const ColorVector canon = ColorVector::canonical(params_.omega);
    CoordCounter counter;
    Buffer child_buf = lifted_buffer(root_starts, 0, params_, classes_);
    for (int lift = 1; lift <= params_.depth; ++lift) {
      bool done = true;
      for (int v = 0; v < g_.num_vertices() && done; ++v)
        if ((*working_)[v] != classes_.c0[v]) done = false;
      if (done) return;
      RecolorCtx ctx = make_ctx(child_buf, nu, budgets_ ? &counter : nullptr);
      drive_border_to_zero(ctx, canon);
      std::size_t before = steps_->size();
      step4_shift({&child_buf}, nu, before);
      child_buf = lifted_buffer(root_starts, lift, params_, classes_);
      if (opts_.debug) {
        std::string why;
        if (!well_colored(child_buf, nu, *working_, &why))
          throw InternalError("lifted buffer not well-colored: " + why);
      }
    }
  }

  const Graph& g_;
  const CanonicalClasses& classes_;
  EngineOptions opts_;
  BudgetStats* budgets_;
  BufferParams params_;
  CliqueTree tree_;
  std::vector<std::optional<VectorTuple>> tuples_;
  Coloring* working_ = nullptr;
  std::vector<RecolorStep>* steps_ = nullptr;
};

void validate_coloring(const Graph& g, const Coloring& c, int k,
                       const char* name) {
  if (static_cast<int>(c.size()) != g.num_vertices())
    throw DomainError(std::string(name) + ": wrong coloring size");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (c[v] < 1 || c[v] > k)
      throw DomainError(std::string(name) + ": color out of range at vertex " +
                        std::to_string(v));
  if (!g.is_proper(c))
    throw DomainError(std::string(name) + ": coloring is not proper");
}

}  // namespace

RecolorSequence recolor_to_canonical(const Graph& g, const Coloring& phi,
                                     int k, const EngineOptions& opts,
                                     BudgetStats* budgets) {
  auto chordality = maximum_cardinality_search(g);
  if (!chordality.chordal()) {
    std::string hole;
    for (int v : chordality.hole) hole += " " + std::to_string(v);
    throw DomainError("graph is not chordal; hole:" + hole);
  }
  const Peo& peo = *chordality.peo;
  CanonicalClasses classes = canonical_coloring(g, peo);
  if (k < classes.omega + 3)
    throw DomainError("k too small: k=" + std::to_string(k) +
                      " < omega+3=" + std::to_string(classes.omega + 3));
  validate_coloring(g, phi, k, "input coloring");

  RecolorSequence seq;
  seq.start = phi;
  seq.omega = classes.omega;
  seq.delta = g.max_degree();
  seq.k = k;

  Coloring working = phi;
  for (const auto& comp : g.connected_components()) {
    if (comp.size() == 1) {
      int v = comp[0];
      if (working[v] != classes.c0[v]) {
        seq.steps.push_back({v, working[v], classes.c0[v]});
        working[v] = classes.c0[v];
      }
      continue;
    }
    Graph local = g.induced(comp);
    // Component-local PEO: the global order restricted to the component.
    Peo lpeo;
    std::vector<int> local_id(g.num_vertices(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i)
      local_id[comp[i]] = static_cast<int>(i);
    for (int v : peo.order)
      if (local_id[v] != -1) lpeo.order.push_back(local_id[v]);
    lpeo.pos.assign(comp.size(), 0);
    for (std::size_t i = 0; i < lpeo.order.size(); ++i)
      lpeo.pos[lpeo.order[i]] = static_cast<int>(i);
    CanonicalClasses lclasses;
    lclasses.c0.resize(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      lclasses.c0[i] = classes.c0[comp[i]];
    lclasses.omega = *std::max_element(lclasses.c0.begin(), lclasses.c0.end());
    lclasses.classes.assign(lclasses.omega, {});
    for (std::size_t i = 0; i < comp.size(); ++i)
      lclasses.classes[lclasses.c0[i] - 1].push_back(static_cast<int>(i));

    ComponentRun run(local, lpeo, lclasses, k, opts, budgets);
    Coloring lworking(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) lworking[i] = working[comp[i]];
    std::vector<RecolorStep> lsteps;
    run.run(lworking, lsteps);
    for (const auto& st : lsteps) {
      int v = comp[st.vertex];
      if (working[v] != st.from)
        throw InternalError("component step desynchronized");
      seq.steps.push_back({v, st.from, st.to});
      working[v] = st.to;
    }
  }

  if (working != classes.c0)
    throw InternalError("sweep did not reach the canonical coloring");
  seq.end = classes.c0;

  std::vector<int> counts(g.num_vertices(), 0);
  for (const auto& st : seq.steps)
    seq.max_per_vertex = std::max(seq.max_per_vertex, ++counts[st.vertex]);
  return seq;
}

RecolorSequence transform(const Graph& g, const Coloring& c1,
                          const Coloring& c2, int k, const EngineOptions& opts,
                          BudgetStats* budgets) {
  RecolorSequence down = recolor_to_canonical(g, c1, k, opts, budgets);
  RecolorSequence up = recolor_to_canonical(g, c2, k, opts, budgets);
  RecolorSequence seq;
  seq.start = c1;
  seq.end = c2;
  seq.omega = down.omega;
  seq.delta = down.delta;
  seq.k = k;
  seq.steps = std::move(down.steps);
  for (auto it = up.steps.rbegin(); it != up.steps.rend(); ++it)
    seq.steps.push_back({it->vertex, it->to, it->from});
  std::vector<int> counts(g.num_vertices(), 0);
  for (const auto& st : seq.steps)
    seq.max_per_vertex = std::max(seq.max_per_vertex, ++counts[st.vertex]);
  return seq;
}

}  // namespace recolor
