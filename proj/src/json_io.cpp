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

#include "recolor/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace recolor {

using nlohmann::json;

Graph load_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON must be {\"n\":int,\"edges\":[[u,v],...]}");
  if (!j["n"].is_number_integer()) throw ParseError("graph JSON: bad n");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (!j["edges"].is_array()) throw ParseError("graph JSON: bad edges");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("graph JSON: each edge must be [u,v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.num_vertices();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Coloring load_coloring(const std::string& text, int n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("coloring JSON: ") + e.what());
  }
  if (!j.is_array())
    throw ParseError("coloring JSON must be an array of integers");
  if (static_cast<int>(j.size()) != n)
    throw ParseError("coloring JSON: expected " + std::to_string(n) +
                     " entries, got " + std::to_string(j.size()));
  Coloring c;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw ParseError("coloring JSON: non-integer entry");
    c.push_back(e.get<int>());
  }
  return c;
}

std::string coloring_to_json(const Coloring& c) {
  json j = json::array();
  for (int col : c) j.push_back(col);
  return j.dump();
}

void write_sequence_jsonl(std::ostream& out, const RecolorSequence& seq) {
  for (const auto& st : seq.steps) {
    json j;
    j["v"] = st.vertex;
    j["from"] = st.from;
    j["to"] = st.to;
    out << j.dump() << "\n";
  }
  json meta;
  meta["length"] = seq.length();
  meta["maxPerVertex"] = seq.max_per_vertex;
  meta["omega"] = seq.omega;
  meta["delta"] = seq.delta;
  meta["k"] = seq.k;
  out << meta.dump() << "\n";
}

SequenceFile read_sequence_jsonl(std::istream& in) {
  SequenceFile file;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("sequence JSONL: ") + e.what());
    }
    if (j.contains("v")) {
      file.steps.push_back({j.at("v").get<int>(), j.at("from").get<int>(),
                            j.at("to").get<int>()});
    } else if (j.contains("length")) {
      file.length = j.at("length").get<long>();
      file.max_per_vertex = j.value("maxPerVertex", -1);
      file.omega = j.value("omega", -1);
      file.delta = j.value("delta", -1);
      file.k = j.value("k", -1);
    } else {
      throw ParseError("sequence JSONL: unrecognized line: " + line);
    }
  }
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace recolor
