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

#ifndef PRESCHECK_GRAPH_H_
#define PRESCHECK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prescheck/vertex_set.h"

namespace prescheck {

using Edge = std::pair<Vertex, Vertex>;

// Largest graph order accepted anywhere in the library. Defaults to 4096 and
// can be overridden with the PRESCHECK_SIZE_CAP environment variable.
std::size_t OrderCap();

// Finite simple undirected graph on vertices 0..order-1, stored as one
// adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  // Throws InvalidArgument on loops or out-of-range endpoints. Repeated
  // edges are merged.
  static Graph FromEdges(std::size_t order, std::span<const Edge> edges);
  static Graph Complete(std::size_t order);
  static Graph Path(std::size_t order);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t EdgeCount() const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
  std::size_t MaxDegree() const;

  void AddEdge(Vertex u, Vertex v);
  void RemoveEdge(Vertex u, Vertex v);
  void ToggleEdge(Vertex u, Vertex v);

  // Each unordered edge once as (min, max), lexicographically sorted.
  std::vector<Edge> Edges() const;
  Graph Complement() const;
  VertexSet AllVertices() const { return VertexSet::Full(order()); }

  bool operator==(const Graph&) const = default;

 private:
  void CheckPair(Vertex u, Vertex v) const;

  std::vector<VertexSet> adjacency_;
};

// A k-partition: every vertex carries one part index in [0, k). Parts may be
// empty.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t k, std::vector<std::uint32_t> part_of);
  static Partition Single(std::size_t order) {
    return Partition(1, std::vector<std::uint32_t>(order, 0));
  }

  std::size_t k() const { return k_; }
  std::size_t size() const { return part_of_.size(); }
  std::uint32_t part(Vertex v) const { return part_of_[v]; }
  const std::vector<std::uint32_t>& parts() const { return part_of_; }
  VertexSet Members(std::uint32_t part, std::size_t universe) const;

  bool operator==(const Partition&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<std::uint32_t> part_of_;
};

// A symmetric subset of [k]^2 (0-based part indices). Construction takes the
// symmetric closure of the given pairs.
class Flip {
 public:
  Flip() = default;
  explicit Flip(std::size_t k) : k_(k), matrix_(k * k, false) {}
  Flip(std::size_t k, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
  Flip(std::size_t k,
       std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs)
      : Flip(k, std::span<const std::pair<std::uint32_t, std::uint32_t>>(
                    pairs.begin(), pairs.size())) {}

  std::size_t k() const { return k_; }
  bool contains(std::uint32_t i, std::uint32_t j) const {
    return matrix_[i * k_ + j];
  }
  bool empty() const;
  // All ordered pairs (i, j) in the flip, lexicographically sorted. Both
  // orientations of an off-diagonal pair are listed.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> Pairs() const;

  bool operator==(const Flip&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<bool> matrix_;
};

// A graph with optional unary part predicates P_1..P_k and named constants.
struct LabeledStructure {
  Graph graph;
  std::optional<Partition> parts;
  std::map<std::string, Vertex> constants;

  LabeledStructure() = default;
  explicit LabeledStructure(Graph g) : graph(std::move(g)) {}
  LabeledStructure(Graph g, std::optional<Partition> p,
                   std::map<std::string, Vertex> c = {});

  std::size_t order() const { return graph.order(); }
  bool operator==(const LabeledStructure&) const = default;
};

// G with edges complemented between every pair of parts listed in F.
Graph ApplyFlip(const Graph& g, const Partition& p, const Flip& f);

// Two copies of G (ids 0..n-1 and n..2n-1) plus cross edges between u in the
// first copy and v in the second whenever (part(u), part(v)) is in F.
Graph FlipSum(const Graph& g, const Partition& p, const Flip& f);

Graph DisjointUnion(const Graph& g, const Graph& h);

// G_(F,P): the flipped graph expanded with the parts of P.
LabeledStructure FlipExpansion(const Graph& g, const Partition& p, const Flip& f);

// Disjoint union of labeled structures. Both sides must carry partitions with
// the same k, or neither; constants of the right side are dropped.
LabeledStructure DisjointUnion(const LabeledStructure& a, const LabeledStructure& b);

struct InducedSubgraph {
  Graph graph;
  // new id -> old id, ascending in old id.
  std::vector<Vertex> to_original;
  // old id -> new id, unset for vertices outside the subset.
  std::vector<std::optional<Vertex>> to_new;
};

InducedSubgraph Induce(const Graph& g, const VertexSet& subset);
InducedSubgraph Induce(const Graph& g, std::span<const Vertex> subset);

// The partition restricted to a subset, renumbered through the remap.
Partition Restrict(const Partition& p, const InducedSubgraph& remap);

// Induced substructure; constants outside the subset are dropped.
LabeledStructure Induce(const LabeledStructure& s, const VertexSet& subset);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// BFS distances from a source; kUnreachable for other components.
std::vector<std::uint32_t> DistancesFrom(const Graph& g, Vertex source);
std::vector<std::uint32_t> DistancesFrom(const Graph& g, const VertexSet& sources);

// Vertices at distance <= radius from some center.
VertexSet Ball(const Graph& g, const VertexSet& centers, std::uint32_t radius);
VertexSet Ball(const Graph& g, Vertex center, std::uint32_t radius);

// True iff every two distinct members are at distance > radius.
bool IsRIndependent(const Graph& g, const VertexSet& members, std::uint32_t radius);

// Scans candidates in ascending id, keeping each one farther than `radius`
// from everything kept so far.
VertexSet GreedyRIndependentSet(const Graph& g, const VertexSet& candidates, std::uint32_t radius);

}  // namespace prescheck

#endif  // PRESCHECK_GRAPH_H_
