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

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "recolor/engine.hpp"
#include "recolor/generators.hpp"
#include "recolor/json_io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/verifier.hpp"

namespace {

using namespace recolor;
using nlohmann::json;

EngineOptions options_from_env() {
  EngineOptions opts;
  const char* dbg = std::getenv("RECOLOR_DEBUG");
  opts.debug = dbg != nullptr && std::string(dbg) == "1";
  return opts;
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

int cmd_recolor(const std::string& graph_path, const std::string& from_path,
                const std::string& to_path, int k, const std::string& out_path,
                bool stats) {
  Graph g = load_graph(read_file(graph_path));
  Coloring from = load_coloring(read_file(from_path), g.num_vertices());
  Coloring to = load_coloring(read_file(to_path), g.num_vertices());
  double t0 = now_ms();
  RecolorSequence seq = transform(g, from, to, k, options_from_env());
  double t1 = now_ms();
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot write " + out_path);
  write_sequence_jsonl(out, seq);
  if (stats) {
    std::cout << "length " << seq.length() << "\n"
              << "maxPerVertex " << seq.max_per_vertex << "\n"
              << "omega " << seq.omega << "\n"
              << "delta " << seq.delta << "\n"
              << "millis " << (t1 - t0) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& start_path,
               const std::string& seq_path, const std::string& end_path,
               int k) {
  Graph g = load_graph(read_file(graph_path));
  Coloring start = load_coloring(read_file(start_path), g.num_vertices());
  Coloring end = load_coloring(read_file(end_path), g.num_vertices());
  std::ifstream in(seq_path);
  if (!in) throw ParseError("cannot open " + seq_path);
  SequenceFile file = read_sequence_jsonl(in);
  VerifyReport rep = verify_sequence(g, start, file.steps, end, k);
  json j;
  j["ok"] = rep.ok;
  j["length"] = rep.length;
  j["maxPerVertex"] = rep.max_per_vertex;
  if (!rep.ok) {
    j["failureIndex"] = rep.failure_index ? json(*rep.failure_index) : json();
    j["failureReason"] = rep.failure_reason;
  }
  std::cout << j.dump() << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_oracle(const std::string& graph_path, int k, const std::string& mode,
               const std::string& from_path, const std::string& to_path) {
  Graph g = load_graph(read_file(graph_path));
  json j;
  j["mode"] = mode;
  if (mode == "connected") {
    j["value"] = reconfig_connected(g, k);
  } else if (mode == "diameter") {
    j["value"] = reconfig_diameter(g, k);
  } else if (mode == "distance") {
    if (from_path.empty() || to_path.empty())
      throw ParseError("distance mode needs --from and --to");
    Coloring c1 = load_coloring(read_file(from_path), g.num_vertices());
    Coloring c2 = load_coloring(read_file(to_path), g.num_vertices());
    auto d = bfs_distance(g, k, c1, c2);
    j["value"] = d ? json(*d) : json();
  } else {
    throw ParseError("unknown oracle mode: " + mode);
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_gen(const std::string& model, int n, int omega, int max_degree,
            std::uint64_t seed, const std::string& out_path) {
  GenSpec spec{parse_model(model), n, omega, max_degree, seed};
  GenResult result = gen_graph(spec);
  write_file(out_path, graph_to_json(result.graph) + "\n");
  json meta;
  meta["model"] = model;
  meta["n"] = n;
  meta["omega"] = result.omega;
  meta["delta"] = result.delta;
  meta["d"] = result.degeneracy;
  meta["seed"] = seed;
  std::cout << meta.dump() << "\n";
  return 0;
}

int cmd_bench(const std::string& model, const std::string& sizes_csv,
              int omega, int max_degree, int k, int repeats,
              std::uint64_t seed) {
  std::vector<int> sizes;
  std::stringstream ss(sizes_csv);
  std::string item;
  while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
  if (sizes.empty()) throw ParseError("bench needs at least one size");

  std::cout << "n,length,length_per_n,maxPerVertex,millis\n";
  std::vector<int> max_per_vertex_by_size;
  std::vector<double> mean_ratio_by_size;
  for (int n : sizes) {
    int worst = 0;
    double ratio_sum = 0;
    for (int r = 0; r < repeats; ++r) {
      GenSpec spec{parse_model(model), n, omega, max_degree,
                   seed + static_cast<std::uint64_t>(r)};
      GenResult inst = gen_graph(spec);
      Coloring c1 = gen_coloring(inst.graph, k, spec.seed * 2 + 1);
      Coloring c2 = gen_coloring(inst.graph, k, spec.seed * 2 + 2);
      double t0 = now_ms();
      RecolorSequence seq = transform(inst.graph, c1, c2, k);
      double t1 = now_ms();
      double ratio = static_cast<double>(seq.length()) / n;
      std::cout << n << "," << seq.length() << "," << ratio << ","
                << seq.max_per_vertex << "," << (t1 - t0) << "\n";
      worst = std::max(worst, seq.max_per_vertex);
      ratio_sum += ratio;
    }
    max_per_vertex_by_size.push_back(worst);
    mean_ratio_by_size.push_back(ratio_sum / repeats);
  }
  bool stable = true;
  for (int m : max_per_vertex_by_size)
    if (m != max_per_vertex_by_size[0]) stable = false;
  double mean_all = 0;
  for (double r : mean_ratio_by_size) mean_all += r;
  mean_all /= mean_ratio_by_size.size();
  for (double r : mean_ratio_by_size)
    if (std::abs(r - mean_all) > 0.1 * mean_all) stable = false;
  std::cerr << "stability " << (stable ? "ok" : "violated") << "\n";
  return stable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chordal graph recoloring toolkit"};
  app.require_subcommand(1);

  std::string graph_path, from_path, to_path, start_path, end_path, seq_path,
      out_path, mode, model, sizes;
  int k = 0, n = 0, omega = 3, max_degree = 8, repeats = 1;
  std::uint64_t seed = 1;
  bool stats = false;

  auto* recolor_cmd = app.add_subcommand("recolor",
                                         "compute a recoloring sequence");
  recolor_cmd->add_option("--graph", graph_path)->required();
  recolor_cmd->add_option("--from", from_path)->required();
  recolor_cmd->add_option("--to", to_path)->required();
  recolor_cmd->add_option("--k", k)->required();
  recolor_cmd->add_option("--out", out_path)->required();
  recolor_cmd->add_flag("--stats", stats);

  auto* verify_cmd = app.add_subcommand("verify", "replay and check a sequence");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--start", start_path)->required();
  verify_cmd->add_option("--seq", seq_path)->required();
  verify_cmd->add_option("--end", end_path)->required();
  verify_cmd->add_option("--k", k)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->add_option("--graph", graph_path)->required();
  oracle_cmd->add_option("--k", k)->required();
  oracle_cmd->add_option("--mode", mode)->required();
  oracle_cmd->add_option("--from", from_path);
  oracle_cmd->add_option("--to", to_path);

  auto* gen_cmd = app.add_subcommand("gen", "generate a chordal instance");
  gen_cmd->add_option("--model", model)->required();
  gen_cmd->add_option("--n", n)->required();
  gen_cmd->add_option("--omega", omega);
  gen_cmd->add_option("--max-degree", max_degree);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path)->required();

  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark (CSV)");
  bench_cmd->add_option("--model", model)->required();
  bench_cmd->add_option("--sizes", sizes)->required();
  bench_cmd->add_option("--omega", omega);
  bench_cmd->add_option("--max-degree", max_degree);
  bench_cmd->add_option("--k", k)->required();
  bench_cmd->add_option("--repeats", repeats);
  bench_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (recolor_cmd->parsed())
      return cmd_recolor(graph_path, from_path, to_path, k, out_path, stats);
    if (verify_cmd->parsed())
      return cmd_verify(graph_path, start_path, seq_path, end_path, k);
    if (oracle_cmd->parsed())
      return cmd_oracle(graph_path, k, mode, from_path, to_path);
    if (gen_cmd->parsed())
      return cmd_gen(model, n, omega, max_degree, seed, out_path);
    if (bench_cmd->parsed())
      return cmd_bench(model, sizes, omega, max_degree, k, repeats, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
