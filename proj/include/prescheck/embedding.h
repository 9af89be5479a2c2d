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

#ifndef PRESCHECK_EMBEDDING_H_
#define PRESCHECK_EMBEDDING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "prescheck/graph.h"

namespace prescheck {

// image[p] is the host vertex of pattern vertex p.
using Embedding = std::vector<Vertex>;

// Injective, edge-preserving and edge-reflecting.
bool IsEmbedding(const Graph& pattern, const Graph& host, const Embedding& f);

// Calls `visit` on each induced embedding until it returns false. Pattern
// vertices are matched by (degree descending, id), host candidates in
// ascending id, so the order is deterministic.
void ForEachEmbedding(const Graph& pattern, const Graph& host,
                      const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> FindEmbeddings(const Graph& pattern, const Graph& host,
                                      std::optional<std::size_t> limit = std::nullopt);
std::uint64_t CountEmbeddings(const Graph& pattern, const Graph& host);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

struct Extension {
  Graph host;
  Embedding witness;  // identity onto the first |G| host vertices
};

// Appends `extra` vertices; every pair involving a new vertex becomes an
// edge with probability density.num/density.den. Same seed, same host.
Extension RandomExtension(const Graph& g, std::uint32_t extra, Rational density, std::uint64_t seed);

}  // namespace prescheck

#endif  // PRESCHECK_EMBEDDING_H_
