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

// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "recolor/engine.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"
#include "recolor/verifier.hpp"
#include "testutil.hpp"

namespace {

using namespace recolor;

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

struct Family {
  GenModel model;
  int omega;
  const char* name;
};

const std::vector<Family> kFamilies = {
    {GenModel::kKTree, 2, "ktree-w2"},   {GenModel::kKTree, 3, "ktree-w3"},
    {GenModel::kKTree, 4, "ktree-w4"},   {GenModel::kPathPower, 2, "pathpower-p1"},
    {GenModel::kPathPower, 3, "pathpower-p2"},
    {GenModel::kPathPower, 4, "pathpower-p3"},
    {GenModel::kInterval, 3, "interval"},
};

std::vector<int> soundness_sizes() {
  std::vector<int> sizes;
  for (int i = 0; i < 450; ++i) sizes.push_back(8 + (i * 37) % 120);
  for (int i = 0; i < 40; ++i) sizes.push_back(200 + i * 15);
  for (int i = 0; i < 10; ++i) sizes.push_back(1100 + i * 100);
  return sizes;
}

// Height spread and separation over one instance: every vertex's bags stay
// within delta levels for the engine's rooting, and every buffer
// decomposition rooted at any node satisfies the separation property.
bool structural_invariants(const GenResult& inst, int k, std::string* why) {
  auto mcs = maximum_cardinality_search(inst.graph);
  if (!mcs.chordal()) {
    *why = "generated instance not chordal";
    return false;
  }
  CanonicalClasses classes = canonical_coloring(inst.graph, *mcs.peo);
  CliqueTree t = build_clique_tree(inst.graph, *mcs.peo);
  root_and_heights(t, 0);
  int delta = inst.graph.max_degree();
  for (int v = 0; v < inst.graph.num_vertices(); ++v) {
    int lo = t.num_nodes(), hi = -1;
    for (int bag : t.bags_of_vertex[v]) {
      lo = std::min(lo, t.height[bag]);
      hi = std::max(hi, t.height[bag]);
    }
    if (hi - lo > delta) {
      *why = "height spread exceeded at vertex " + std::to_string(v);
      return false;
    }
  }
  if (delta >= 1) {
    BufferParams params(classes.omega, delta, k);
    for (int node = 0; node < t.num_nodes(); ++node) {
      root_and_heights(t, node);
      Buffer buf = decompose_buffer(t, node, params, classes);
      if (!check_separation(buf, inst.graph, why)) return false;
    }
  }
  return true;
}

struct SoundnessOutcome {
  long instances = 0;
  long failures = 0;
  std::string first_failure;
  BudgetStats budgets;
  bool structural_ok = true;
  std::string structural_why;
};

SoundnessOutcome run_soundness() {
  SoundnessOutcome out;
  auto sizes = soundness_sizes();
  for (const Family& family : kFamilies) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      int n = std::max(sizes[i], family.omega);
      GenSpec spec{family.model, n, family.omega, 8, 1000 + i};
      if (family.model == GenModel::kPathPower)
        spec.max_degree = std::max(8, 2 * (family.omega - 1));
      GenResult inst = gen_graph(spec);
      int k = inst.omega + 3;
      Coloring c1 = gen_coloring(inst.graph, k, 2 * i + 1);
      Coloring c2 = gen_coloring(inst.graph, k, 2 * i + 2);
      EngineOptions opts;
      opts.debug = n <= 200;
      ++out.instances;
      try {
        RecolorSequence seq =
            transform(inst.graph, c1, c2, k, opts, &out.budgets);
        VerifyReport rep = verify_sequence(inst.graph, c1, seq.steps, c2, k);
        if (!rep.ok) {
          ++out.failures;
          if (out.first_failure.empty())
            out.first_failure = family.name + std::string(" n=") +
                                std::to_string(n) + ": " + rep.failure_reason;
        }
      } catch (const RecolorError& e) {
        ++out.failures;
        if (out.first_failure.empty())
          out.first_failure = family.name + std::string(" n=") +
                              std::to_string(n) + ": " + e.what();
      }
      if (out.structural_ok && (n <= 200 || i % 25 == 0)) {
        std::string why;
        if (!structural_invariants(inst, k, &why)) {
          out.structural_ok = false;
          out.structural_why = family.name + std::string(" n=") +
                               std::to_string(n) + ": " + why;
        }
      }
    }
  }
  return out;
}

void criterion_oracle_equivalence() {
  long checked = 0, violations = 0;
  std::string first;
  for (const Family& family : kFamilies) {
    for (int n = std::max(2, family.omega); n <= 7; ++n) {
      if (family.model == GenModel::kKTree && n < family.omega) continue;
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenSpec spec{family.model, n, family.omega, 6, seed};
        GenResult inst;
        try {
          inst = gen_graph(spec);
        } catch (const DomainError&) {
          continue;  // infeasible tiny spec
        }
        for (int k : {inst.omega + 3, inst.omega + 4}) {
          Coloring c1 = gen_coloring(inst.graph, k, seed * 3 + 1);
          Coloring c2 = gen_coloring(inst.graph, k, seed * 3 + 2);
          ++checked;
          try {
            RecolorSequence seq = transform(inst.graph, c1, c2, k);
            VerifyReport rep =
                verify_sequence(inst.graph, c1, seq.steps, c2, k);
            auto dist = bfs_distance(inst.graph, k, c1, c2);
            bool ok = rep.ok && dist.has_value() &&
                      static_cast<long>(seq.length()) >= *dist;
            if (!ok) {
              ++violations;
              if (first.empty())
                first = std::string(family.name) + " n=" + std::to_string(n) +
                        " k=" + std::to_string(k);
            }
          } catch (const RecolorError& e) {
            ++violations;
            if (first.empty()) first = e.what();
          }
        }
      }
    }
  }
  report("oracle-equivalence", violations == 0,
         std::to_string(checked) + " endpoint pairs, " +
             std::to_string(violations) + " violations" +
             (first.empty() ? "" : " (first: " + first + ")"));
}

void criterion_linearity() {
  const std::vector<int> sizes{500, 1000, 2000, 4000};
  const int repeats = 3;
  std::vector<int> max_pv(sizes.size(), 0);
  std::vector<double> ratio(sizes.size(), 0);
  std::vector<double> millis(sizes.size(), 0);
  std::string error;
  for (std::size_t si = 0; si < sizes.size() && error.empty(); ++si) {
    for (int r = 1; r <= repeats; ++r) {
      GenSpec spec{GenModel::kKTree, sizes[si], 3, 8,
                   static_cast<std::uint64_t>(r)};
      GenResult inst = gen_graph(spec);
      Coloring c1 = gen_coloring(inst.graph, 6, 100 + r);
      Coloring c2 = gen_coloring(inst.graph, 6, 200 + r);
      double t0 = now_ms();
      RecolorSequence seq = transform(inst.graph, c1, c2, 6);
      double t1 = now_ms();
      VerifyReport rep = verify_sequence(inst.graph, c1, seq.steps, c2, 6);
      if (!rep.ok) error = "sequence failed verification at n=" +
                           std::to_string(sizes[si]);
      max_pv[si] = std::max(max_pv[si], seq.max_per_vertex);
      ratio[si] += static_cast<double>(seq.length()) / sizes[si] / repeats;
      millis[si] += (t1 - t0) / repeats;
    }
  }
  bool pv_ok = error.empty();
  for (int m : max_pv) pv_ok = pv_ok && m == max_pv[0];
  double mean = 0;
  for (double x : ratio) mean += x / ratio.size();
  bool ratio_ok = true;
  for (double x : ratio)
    if (std::abs(x - mean) > 0.1 * mean) ratio_ok = false;
  bool time_ok = millis[3] <= 10.0 * millis[0];
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "maxPerVertex={%d,%d,%d,%d} length/n={%.2f,%.2f,%.2f,%.2f} "
                "ms={%.0f,%.0f,%.0f,%.0f}%s%s",
                max_pv[0], max_pv[1], max_pv[2], max_pv[3], ratio[0], ratio[1],
                ratio[2], ratio[3], millis[0], millis[1], millis[2], millis[3],
                error.empty() ? "" : " error=", error.c_str());
  report("linearity", pv_ok && ratio_ok && time_ok && error.empty(), buf);
}

void criterion_budgets(const SoundnessOutcome& out) {
  // step3 bound: c3 * omega^2 with c3 pinned; omega ranges over 2..4 here so
  // the strictest instance is omega = 2. c3 measured on this corpus and
  // fixed below; a regression beyond it fails the criterion.
  const int c3 = 14;
  const BudgetStats& b = out.budgets;
  bool counts_ok = b.step1_calls >= 1000 && b.step2_calls >= 1000 &&
                   b.step3_calls >= 1000 && b.step4_calls >= 1000;
  bool ok = counts_ok && b.step1_max_coord <= 3 && b.step2_max_coord <= 6 &&
            b.step3_max_coord <= c3 * 2 * 2 && b.step4_max_vertex <= 1;
  char buf[256];
  std::snprintf(
      buf, sizeof buf,
      "step1<=3: %d (%ld calls); step2<=6: %d (%ld); step3<=%d*w^2: %d "
      "(%ld); step4<=1: %d (%ld)",
      b.step1_max_coord, b.step1_calls, b.step2_max_coord, b.step2_calls, c3,
      b.step3_max_coord, b.step3_calls, b.step4_max_vertex, b.step4_calls);
  report("per-lemma-budgets", ok, buf);
}

void criterion_structural(const SoundnessOutcome& out) {
  // check_validity vs an independent naive re-derivation on random tuples.
  BufferParams params(3, 2, 6);
  SplitMix64 rng(424242);
  long mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ColorVector target(3);
    std::vector<int> colors{1, 2, 3, 4, 5, 6};
    for (int p = 1; p <= 3; ++p) {
      int idx = static_cast<int>(rng.below(colors.size()));
      target.set(p, colors[idx]);
      colors.erase(colors.begin() + idx);
    }
    VectorTuple nu = construct_valid_tuple(target, params);
    int perturbations = static_cast<int>(rng.below(4));
    for (int i = 0; i < perturbations; ++i) {
      int block = 1 + static_cast<int>(rng.below(params.blocks()));
      if (rng.below(2) == 0) {
        int p = 1 + static_cast<int>(rng.below(3));
        int q = 1 + static_cast<int>(rng.below(3));
        if (p != q) nu.at(block).swap_coordinates(p, q);
      } else {
        int p = 1 + static_cast<int>(rng.below(3));
        int c = 1 + static_cast<int>(rng.below(6));
        if (!nu.at(block).contains(c)) nu.at(block).set(p, c);
      }
    }
    if (check_validity(params, nu).status !=
        recolor::testutil::naive_validity(params, nu))
      ++mismatches;
  }
  bool ok = out.structural_ok && mismatches == 0;
  report("structural-invariants", ok,
         (out.structural_ok ? std::string("height-spread+separation ok")
                            : out.structural_why) +
             "; validity mismatches=" + std::to_string(mismatches) + "/1000");
}

void criterion_frozen_gate() {
  std::string detail;
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    bool connected = reconfig_connected(testutil::complete(n), n);
    if (connected) {
      ok = false;
      detail += "K_" + std::to_string(n) + " reported connected; ";
    }
  }
  long checked = 0;
  for (const Family& family : kFamilies) {
    for (int n = std::max(2, family.omega); n <= 7; ++n) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        GenSpec spec{family.model, n, family.omega, 6, seed};
        GenResult inst;
        try {
          inst = gen_graph(spec);
        } catch (const DomainError&) {
          continue;
        }
        for (int k = inst.omega + 1; k <= inst.omega + 2; ++k) {
          ++checked;
          if (!reconfig_connected(inst.graph, k)) {
            ok = false;
            if (detail.size() < 150)
              detail += std::string(family.name) + " n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + " disconnected; ";
          }
        }
      }
    }
  }
  report("frozen-instance-gate", ok,
         "K_n frozen for n=3..5; " + std::to_string(checked) +
             " small chordal instances connected at k>=omega+1" +
             (detail.empty() ? "" : "; " + detail));
}

}  // namespace

int main() {
  double t0 = now_ms();
  SoundnessOutcome soundness = run_soundness();
  report("soundness-suite", soundness.failures == 0,
         std::to_string(soundness.instances) + " instances, " +
             std::to_string(soundness.failures) + " failures" +
             (soundness.first_failure.empty()
                  ? ""
                  : " (first: " + soundness.first_failure + ")"));
  criterion_oracle_equivalence();
  criterion_linearity();
  criterion_budgets(soundness);
  criterion_structural(soundness);
  criterion_frozen_gate();
  std::printf("total %.1fs, %d criterion failure(s)\n",
              (now_ms() - t0) / 1000.0, g_failures);
  return g_failures == 0 ? 0 : 1;
}
