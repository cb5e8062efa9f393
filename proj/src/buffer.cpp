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

#include "recolor/buffer.hpp"

#include <algorithm>
#include <sstream>

namespace recolor {

BufferParams::BufferParams(int omega_, int delta_, int k_)
    : omega(omega_), delta(delta_), k(k_) {
  if (omega < 1) throw DomainError("omega must be positive");
  if (delta < 1) throw DomainError("delta must be positive");
  if (k < omega + 3)
    throw DomainError("k must be at least omega + 3 (k=" + std::to_string(k) +
                      ", omega=" + std::to_string(omega) + ")");
  pairs = omega * (omega - 1) / 2;
  s = 3 * pairs + 2;
  big_n = s + k - omega + 1;
  depth = 3 * delta * big_n;
}

ColorVector ColorVector::canonical(int omega) {
  ColorVector nu(omega);
  for (int p = 1; p <= omega; ++p) nu.set(p, p);
  return nu;
}

int ColorVector::class_of(int color) const {
  for (int p = 1; p <= size(); ++p)
    if (entries_[p - 1] == color) return p;
  return 0;
}

void ColorVector::swap_coordinates(int p, int l) {
  std::swap(entries_[p - 1], entries_[l - 1]);
}

bool ColorVector::distinct_entries(int k) const {
  for (int p = 1; p <= size(); ++p) {
    if (entries_[p - 1] < 1 || entries_[p - 1] > k) return false;
    for (int q = p + 1; q <= size(); ++q)
      if (entries_[p - 1] == entries_[q - 1]) return false;
  }
  return true;
}

RegionKind classify_region(const ColorVector& a, const ColorVector& b,
                           const ColorVector& c, int omega) {
  RegionKind r;
  std::vector<int> diff;
  for (int p = 1; p <= omega; ++p)
    if (!(a.at(p) == b.at(p) && b.at(p) == c.at(p))) diff.push_back(p);

  if (diff.empty()) {
    r.kind = RegionKind::kWaiting;
    return r;
  }
  if (diff.size() == 1) {
    int p = diff[0];
    int c1 = a.at(p), z = b.at(p);
    if (c1 <= omega && z > omega && c.at(p) == z) {
      r.kind = RegionKind::kColor;
      r.class_p = p;
      r.c1 = c1;
      r.z = z;
      return r;
    }
    r.reason = "single differing coordinate without color-region shape";
    return r;
  }
  if (diff.size() == 2) {
    int p = diff[0], q = diff[1];
    int c1 = a.at(p), c2 = a.at(q);
    bool shape = c1 <= omega && c2 <= omega && b.at(p) > omega &&
                 b.at(q) > omega && c.at(p) == c2 && c.at(q) == c1;
    if (shape) {
      for (int m = 1; m <= omega && shape; ++m)
        if (m != p && m != q && a.at(m) > omega) shape = false;
      if (shape) {
        r.kind = RegionKind::kTransposition;
        r.class_p = p;
        r.class_q = q;
        r.c1 = c1;
        r.c2 = c2;
        r.z = b.at(p);
        r.zp = b.at(q);
        return r;
      }
    }
    r.reason = "two differing coordinates without transposition shape";
    return r;
  }
  r.reason = "more than two differing coordinates";
  return r;
}

VectorTuple::VectorTuple(const BufferParams& params) {
  v.assign(params.blocks() + 1, ColorVector::canonical(params.omega));
}

ValidityReport check_validity(const BufferParams& params,
                              const VectorTuple& nu) {
  ValidityReport rep;
  const int n_regions = params.big_n;
  const int s = params.s;

  for (int b = 1; b <= params.blocks(); ++b) {
    if (!nu.at(b).distinct_entries(params.k)) {
      rep.property = 0;
      rep.region = params.region_of(b);
      rep.detail = "malformed color vector at block " + std::to_string(b);
      return rep;
    }
  }
  // Property 1: continuity across region borders.
  for (int i = 1; i < n_regions; ++i) {
    if (!(nu.at(params.block_c(i)) == nu.at(params.block_a(i + 1)))) {
      rep.property = 1;
      rep.region = i;
      rep.detail = "continuity broken between R" + std::to_string(i) +
                   " and R" + std::to_string(i + 1);
      return rep;
    }
  }
  // Property 2: R_1 canonical.
  const ColorVector canon = ColorVector::canonical(params.omega);
  for (int b = 1; b <= 3; ++b) {
    if (!(nu.at(b) == canon)) {
      rep.property = 2;
      rep.region = 1;
      rep.detail = "R1 is not canonical";
      return rep;
    }
  }
  // Property 3: transposition buffer with shared temporaries.
  int shared_z = 0, shared_zp = 0;
  for (int j = 2; j <= s - 1; ++j) {
    RegionKind kind = classify_region(nu.at(params.block_a(j)),
                                      nu.at(params.block_b(j)),
                                      nu.at(params.block_c(j)), params.omega);
    if (kind.waiting()) continue;
    if (!kind.transposition()) {
      rep.property = 3;
      rep.region = j;
      rep.detail = "transposition buffer holds a non-transposition region";
      return rep;
    }
    int lo = std::min(kind.z, kind.zp), hi = std::max(kind.z, kind.zp);
    if (shared_z == 0) {
      shared_z = lo;
      shared_zp = hi;
    } else if (shared_z != lo || shared_zp != hi) {
      rep.property = 3;
      rep.region = j;
      rep.detail = "transposition regions use different temporary colors";
      return rep;
    }
  }
  // Property 4: color buffer.
  for (int j = s + 1; j <= n_regions - 1; ++j) {
    RegionKind kind = classify_region(nu.at(params.block_a(j)),
                                      nu.at(params.block_b(j)),
                                      nu.at(params.block_c(j)), params.omega);
    if (!kind.waiting() && !kind.color()) {
      rep.property = 4;
      rep.region = j;
      rep.detail = "color buffer holds a non-color region";
      return rep;
    }
  }
  // Property 5 / 5': boundary regions.
  RegionKind rn = classify_region(nu.at(params.block_a(n_regions)),
                                  nu.at(params.block_b(n_regions)),
                                  nu.at(params.block_c(n_regions)),
                                  params.omega);
  if (!rn.waiting()) {
    rep.property = 5;
    rep.region = n_regions;
    rep.detail = "R_N is not a waiting region";
    return rep;
  }
  RegionKind rs = classify_region(nu.at(params.block_a(s)),
                                  nu.at(params.block_b(s)),
                                  nu.at(params.block_c(s)), params.omega);
  if (rs.waiting()) {
    rep.status = Validity::kValid;
    return rep;
  }
  if (rs.transposition()) {
    rep.status = Validity::kAlmostValid;
    rep.property = 5;
    rep.region = s;
    return rep;
  }
  rep.property = 5;
  rep.region = s;
  rep.detail = "R_s is neither waiting nor a transposition region";
  return rep;
}

bool is_vectorially_proper(const VectorTuple& nu) {
  for (std::size_t i = 1; i + 1 < nu.v.size(); ++i) {
    const ColorVector& cur = nu.v[i];
    const ColorVector& next = nu.v[i + 1];
    for (int p = 1; p <= cur.size(); ++p) {
      int q = next.class_of(cur.at(p));
      if (q != 0 && q != p) return false;
    }
  }
  return true;
}

int border_error(const ColorVector& nu_c, const VectorTuple& nu) {
  const ColorVector& last = nu.last();
  int d = 0;
  for (int p = 1; p <= last.size(); ++p)
    if (last.at(p) != nu_c.at(p)) ++d;
  return d;
}

ColorVector clique_vector(const std::vector<int>& bag, const Coloring& working,
                          const CanonicalClasses& classes, int k) {
  ColorVector nu(classes.omega);
  for (int v : bag) nu.set(classes.c0[v], working[v]);
  std::vector<char> used(k + 1, 0);
  for (int p = 1; p <= classes.omega; ++p)
    if (nu.at(p) != 0) used[nu.at(p)] = 1;
  int next = 1;
  for (int p = 1; p <= classes.omega; ++p) {
    if (nu.at(p) != 0) continue;
    while (used[next]) ++next;
    nu.set(p, next);
    used[next] = 1;
  }
  return nu;
}

VectorTuple construct_valid_tuple(const ColorVector& target,
                                  const BufferParams& params) {
  const int omega = params.omega;
  if (!target.distinct_entries(params.k))
    throw InternalError("construct_valid_tuple: malformed target vector");

  // Factor the target as a permutation of the canonical colors followed by
  // canonical -> non-canonical substitutions.
  ColorVector sigma(omega);
  std::vector<char> used(omega + 1, 0);
  for (int p = 1; p <= omega; ++p)
    if (target.at(p) <= omega) {
      sigma.set(p, target.at(p));
      used[target.at(p)] = 1;
    }
  int next = 1;
  for (int p = 1; p <= omega; ++p) {
    if (sigma.at(p) != 0) continue;
    while (used[next]) ++next;
    sigma.set(p, next);
    used[next] = 1;
  }

  // Cycle factorization of sigma read as a permutation of 1..omega; the
  // transpositions are applied in region order starting at R_2.
  std::vector<Transposition> taus;
  std::vector<char> visited(omega + 1, 0);
  for (int start = 1; start <= omega; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int x = start;
    while (!visited[x]) {
      visited[x] = 1;
      cycle.push_back(x);
      x = sigma.at(x);
    }
    for (std::size_t i = 1; i < cycle.size(); ++i)
      taus.push_back({std::min(start, cycle[i]), std::max(start, cycle[i])});
  }
  if (static_cast<int>(taus.size()) > params.s - 2)
    throw InternalError("transposition factorization exceeds buffer slots");

  VectorTuple nu(params);
  ColorVector cur = ColorVector::canonical(omega);
  const int z = omega + 1, zp = omega + 2;
  for (int j = 2; j <= params.s - 1; ++j) {
    nu.at(params.block_a(j)) = cur;
    std::size_t idx = static_cast<std::size_t>(j - 2);
    if (idx < taus.size()) {
      int p = cur.class_of(taus[idx].color1);
      int q = cur.class_of(taus[idx].color2);
      ColorVector mid = cur;
      mid.set(p, z);
      mid.set(q, zp);
      nu.at(params.block_b(j)) = mid;
      cur.swap_coordinates(p, q);
    } else {
      nu.at(params.block_b(j)) = cur;
    }
    nu.at(params.block_c(j)) = cur;
  }
  for (int b = params.block_a(params.s); b <= params.block_c(params.s); ++b)
    nu.at(b) = cur;

  std::vector<int> subs;
  for (int p = 1; p <= omega; ++p)
    if (target.at(p) > omega) subs.push_back(p);
  if (static_cast<int>(subs.size()) > params.big_n - params.s - 1)
    throw InternalError("substitutions exceed color-buffer slots");
  for (int j = params.s + 1; j <= params.big_n - 1; ++j) {
    nu.at(params.block_a(j)) = cur;
    std::size_t idx = static_cast<std::size_t>(j - params.s - 1);
    if (idx < subs.size()) {
      cur.set(subs[idx], target.at(subs[idx]));
    }
    nu.at(params.block_b(j)) = cur;
    nu.at(params.block_c(j)) = cur;
  }
  for (int b = params.block_a(params.big_n); b <= params.block_c(params.big_n);
       ++b)
    nu.at(b) = cur;

  if (!(nu.last() == target))
    throw InternalError("construct_valid_tuple: target not reached");
  if (!check_validity(params, nu).valid())
    throw InternalError("construct_valid_tuple: result not valid");
  return nu;
}

Transposition region_tau(const BufferParams& params, const VectorTuple& nu,
                         int j) {
  RegionKind kind = classify_region(nu.at(params.block_a(j)),
                                    nu.at(params.block_b(j)),
                                    nu.at(params.block_c(j)), params.omega);
  if (kind.waiting()) return {};
  if (!kind.transposition())
    throw InternalError("region_tau on a non-transposition region");
  return {std::min(kind.c1, kind.c2), std::max(kind.c1, kind.c2)};
}

std::pair<int, int> buffer_temp_pair(const BufferParams& params,
                                     const VectorTuple& nu) {
  for (int j = 2; j <= params.s - 1; ++j) {
    RegionKind kind = classify_region(nu.at(params.block_a(j)),
                                      nu.at(params.block_b(j)),
                                      nu.at(params.block_c(j)), params.omega);
    if (kind.transposition())
      return {std::min(kind.z, kind.zp), std::max(kind.z, kind.zp)};
  }
  return {params.omega + 1, params.omega + 2};
}

namespace {
std::string vec_to_string(const ColorVector& nu) {
  std::ostringstream out;
  out << "(";
  for (int p = 1; p <= nu.size(); ++p) {
    if (p > 1) out << ",";
    out << nu.at(p);
  }
  out << ")";
  return out.str();
}
}  // namespace

std::string dump_tuple(const BufferParams& params, const VectorTuple& nu) {
  static const char* names[] = {"waiting", "color", "transposition",
                                "irregular"};
  std::ostringstream out;
  for (int j = 1; j <= params.big_n; ++j) {
    RegionKind kind = classify_region(nu.at(params.block_a(j)),
                                      nu.at(params.block_b(j)),
                                      nu.at(params.block_c(j)), params.omega);
    out << "R" << j << " " << names[kind.kind] << " A="
        << vec_to_string(nu.at(params.block_a(j)))
        << " B=" << vec_to_string(nu.at(params.block_b(j)))
        << " C=" << vec_to_string(nu.at(params.block_c(j))) << "\n";
  }
  return out.str();
}

namespace {
Buffer assemble(const BufferParams& params, int root_node,
                const std::unordered_map<int, int>& starts, int lift,
                const CanonicalClasses& classes) {
  Buffer buf;
  buf.params = params;
  buf.root_node = root_node;
  buf.block_class.assign(params.blocks() + 1,
                         std::vector<std::vector<int>>(params.omega + 1));
  for (auto [v, h0] : starts) {
    int h = h0 + lift;
    if (h >= params.depth) continue;
    int block = 3 * params.big_n - h / params.delta;
    buf.member.emplace(v, std::make_pair(block, h));
    buf.block_class[block][classes.c0[v]].push_back(v);
  }
  for (auto& per_block : buf.block_class)
    for (auto& list : per_block) std::sort(list.begin(), list.end());
  return buf;
}
}  // namespace

Buffer decompose_buffer(const CliqueTree& t, int root_node,
                        const BufferParams& params,
                        const CanonicalClasses& classes) {
  // Scan one spread past the window so start heights near the boundary are
  // exact; anything that only appears deeper than the window is dropped by
  // assemble().
  auto starts =
      subtree_start_heights(t, root_node, params.depth - 1 + params.delta);
  return assemble(params, root_node, starts, 0, classes);
}

Buffer lifted_buffer(const std::unordered_map<int, int>& root_starts, int lift,
                     const BufferParams& params,
                     const CanonicalClasses& classes) {
  return assemble(params, -1, root_starts, lift, classes);
}

std::vector<char> internal_classes(const Buffer& buf, const Graph& g,
                                   const CanonicalClasses& classes) {
  const BufferParams& params = buf.params;
  std::vector<char> internal(classes.omega + 1, 1);
  internal[0] = 0;
  const int first_block = params.block_a(params.big_n - 1);
  for (int p = 1; p <= classes.omega; ++p) {
    bool ok = true;
    for (int b = params.block_a(params.big_n);
         ok && b <= params.block_c(params.big_n); ++b) {
      for (int v : buf.verts(b, p)) {
        for (int u : g.neighbors(v)) {
          int ub = buf.block_of(u);
          if (ub < first_block) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    internal[p] = ok ? 1 : 0;
  }
  return internal;
}

bool check_separation(const Buffer& buf, const Graph& g, std::string* why) {
  for (const auto& [v, info] : buf.member) {
    int block = info.first;
    for (int u : g.neighbors(v)) {
      auto it = buf.member.find(u);
      // Neighbors above the buffer only touch the top block; neighbors in
      // the canonical zone below only touch block 1.
      int ub;
      if (it == buf.member.end()) {
        // u starts either above the root or below the window; decide by v's
        // block: only blocks 1 and 3N may have such neighbors.
        if (block != 1 && block != buf.params.blocks()) {
          if (why)
            *why = "vertex " + std::to_string(v) + " in block " +
                   std::to_string(block) + " has neighbor " +
                   std::to_string(u) + " outside the buffer";
          return false;
        }
        continue;
      }
      ub = it->second.first;
      if (ub < block - 1 || ub > block + 1) {
        if (why)
          *why = "blocks " + std::to_string(block) + " and " +
                 std::to_string(ub) + " adjacent via " + std::to_string(v) +
                 "-" + std::to_string(u);
        return false;
      }
    }
  }
  return true;
}

bool well_colored(const Buffer& buf, const VectorTuple& nu,
                  const Coloring& working, std::string* why) {
  for (int b = 1; b <= buf.params.blocks(); ++b) {
    for (int p = 1; p <= buf.params.omega; ++p) {
      for (int v : buf.verts(b, p)) {
        if (working[v] != nu.at(b).at(p)) {
          if (why)
            *why = "vertex " + std::to_string(v) + " in block " +
                   std::to_string(b) + " class " + std::to_string(p) +
                   " colored " + std::to_string(working[v]) + " but vector " +
                   "says " + std::to_string(nu.at(b).at(p));
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace recolor
