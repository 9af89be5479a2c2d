// Copyright 2026 The prescheck Authors
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

#include "prescheck/graph_io.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "prescheck/error.h"

namespace prescheck {
namespace {

Vertex VertexId(const nlohmann::json& j, std::size_t order, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      static_cast<std::size_t>(j.get<long long>()) >= order) {
    throw InvalidArgument(std::string(what) + " " + j.dump() + " is not a vertex id below " +
                          std::to_string(order));
  }
  return static_cast<Vertex>(j.get<long long>());
}

}  // namespace

GraphDocument GraphDocumentFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_number_integer() ||
      doc["order"].get<long long>() < 0) {
    throw InvalidArgument("graph document needs a non-negative integer \"order\"");
  }
  const auto order = static_cast<std::size_t>(doc["order"].get<long long>());
  GraphDocument out;
  out.graph = Graph(order);
  std::set<Edge> seen;
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge " + e.dump() + " is not a pair");
      Vertex u = VertexId(e[0], order, "edge endpoint");
      Vertex v = VertexId(e[1], order, "edge endpoint");
      if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw InvalidArgument("duplicate edge " + e.dump());
      }
      out.graph.AddEdge(u, v);
    }
  }
  if (doc.contains("labels")) {
    for (const auto& [name, v] : doc["labels"].items()) out.labels[name] = VertexId(v, order, "label");
  }
  if (doc.contains("partition")) {
    const auto& parts = doc["partition"];
    if (!parts.is_array() || parts.size() != order)
      throw InvalidArgument("partition must list one part index per vertex");
    std::vector<std::uint32_t> labels;
    std::uint32_t max_part = 0;
    for (const auto& p : parts) {
      if (!p.is_number_integer() || p.get<long long>() < 0) throw InvalidArgument("bad part index " + p.dump());
      labels.push_back(static_cast<std::uint32_t>(p.get<long long>()));
      max_part = std::max(max_part, labels.back());
    }
    std::size_t k = order == 0 ? 1 : max_part + 1;
    if (doc.contains("k")) k = doc["k"].get<std::size_t>();
    out.partition = Partition(k, std::move(labels));
  }
  if (doc.contains("flip")) {
    std::size_t k = out.partition ? out.partition->k() : 0;
    if (doc.contains("k")) k = doc["k"].get<std::size_t>();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& pr : doc["flip"]) {
      if (!pr.is_array() || pr.size() != 2) throw InvalidArgument("flip entry " + pr.dump() + " is not a pair");
      pairs.emplace_back(pr[0].get<std::uint32_t>(), pr[1].get<std::uint32_t>());
      k = std::max<std::size_t>(k, std::max(pairs.back().first, pairs.back().second) + 1);
    }
    out.flip = Flip(k, pairs);
  }
  return out;
}

nlohmann::json ToJson(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.Edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

nlohmann::json ToJson(const GraphDocument& doc) {
  nlohmann::json j = ToJson(doc.graph);
  if (!doc.labels.empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [name, v] : doc.labels) labels[name] = v;
    j["labels"] = std::move(labels);
  }
  if (doc.partition) {
    j["partition"] = doc.partition->parts();
    j["k"] = doc.partition->k();
  }
  if (doc.flip) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : doc.flip->Pairs())
      if (a <= b) pairs.push_back({a, b});
    j["flip"] = std::move(pairs);
    j["k"] = doc.flip->k();
  }
  return j;
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  long long max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a;
    fields >> a;
    if (a == "order") {
      std::size_t n;
      if (!(fields >> n) || !edges.empty() || declared)
        throw InvalidArgument("misplaced or malformed order line " + std::to_string(line_no));
      declared = n;
      continue;
    }
    long long u, v;
    std::istringstream pair_in(line);
    std::string rest;
    if (!(pair_in >> u >> v) || (pair_in >> rest) || u < 0 || v < 0)
      throw InvalidArgument("line " + std::to_string(line_no) + " is not an edge \"u v\"");
    if (u == v) throw InvalidArgument("self-loop on line " + std::to_string(line_no));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id = std::max({max_id, u, v});
  }
  std::size_t order = declared.value_or(static_cast<std::size_t>(max_id + 1));
  if (max_id >= 0 && static_cast<std::size_t>(max_id) >= order)
    throw InvalidArgument("edge endpoint exceeds the declared order");
  std::set<Edge> seen;
  for (const auto& [u, v] : edges)
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  return Graph::FromEdges(order, edges);
}

std::string ToEdgeList(const Graph& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.Edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphDocument ParseGraphText(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
    }
    return GraphDocumentFromJson(j);
  }
  GraphDocument doc;
  doc.graph = ParseEdgeList(text);
  return doc;
}

GraphDocument ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraphText(buffer.str());
}

}  // namespace prescheck
