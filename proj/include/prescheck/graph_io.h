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

#ifndef PRESCHECK_GRAPH_IO_H_
#define PRESCHECK_GRAPH_IO_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>
#include "prescheck/graph.h"

namespace prescheck {

// The JSON graph document:
//   {"order": n, "edges": [[u,v],...], "labels": {"v1": 0, ...},
//    "partition": [p0, ...], "k": k, "flip": [[i,j], ...]}
// Only "order" and "edges" are required. Part indices are 0-based; "k"
// defaults to one more than the largest part index.
struct GraphDocument {
  Graph graph;
  std::map<std::string, Vertex> labels;
  std::optional<Partition> partition;
  std::optional<Flip> flip;
};

// Throws InvalidArgument on loops, duplicate edges, or out-of-range ids.
GraphDocument GraphDocumentFromJson(const nlohmann::json& doc);
nlohmann::json ToJson(const GraphDocument& doc);
nlohmann::json ToJson(const Graph& g);

// One edge "u v" per line. Blank lines and lines starting with '#' are
// skipped; an optional leading "order N" line fixes the vertex count,
// otherwise it is one more than the largest id.
Graph ParseEdgeList(std::string_view text);
std::string ToEdgeList(const Graph& g);

// Dispatches on content: a document starting with '{' is JSON, anything else
// is an edge list.
GraphDocument ParseGraphText(std::string_view text);
GraphDocument ReadGraphFile(const std::string& path);

}  // namespace prescheck

#endif  // PRESCHECK_GRAPH_IO_H_
