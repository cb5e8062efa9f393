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
#include "recolor/lemmas.hpp"

namespace recolor {

struct RecolorSequence {
  std::vector<RecolorStep> steps;
  Coloring start;
  Coloring end;
  int omega = 0;
  int delta = 0;
  int k = 0;
  int max_per_vertex = 0;

  std::size_t length() const { return steps.size(); }
};

// Per-lemma maxima over all invocations, for the budget checks.
struct BudgetStats {
  long step1_calls = 0;
  int step1_max_coord = 0;
  long step2_calls = 0;
  int step2_max_coord = 0;
  long step3_calls = 0;
  int step3_max_coord = 0;
  long step4_calls = 0;
  int step4_max_vertex = 0;

  void merge(const BudgetStats& other);
};

struct EngineOptions {
  bool debug = false;  // per-lemma validity checks and per-step properness
};

// Recolors phi into the canonical coloring of g. Requires phi proper and
// k >= omega + 3. Throws DomainError (NotChordal, KTooSmall, improper
// input) or InternalError on invariant failures.
RecolorSequence recolor_to_canonical(const Graph& g, const Coloring& phi,
                                     int k, const EngineOptions& opts = {},
                                     BudgetStats* budgets = nullptr);

// Transformation from c1 to c2: canonicalize c1, then append the reversed
// canonicalization of c2.
RecolorSequence transform(const Graph& g, const Coloring& c1,
                          const Coloring& c2, int k,
                          const EngineOptions& opts = {},
                          BudgetStats* budgets = nullptr);

}  // namespace recolor
