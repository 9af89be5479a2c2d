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

#ifndef PRESCHECK_CONSTRUCTIONS_H_
#define PRESCHECK_CONSTRUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include "prescheck/graph.h"

namespace prescheck {

struct NamedGraph {
  Graph graph;
  std::map<std::string, Vertex> names;

  Vertex at(const std::string& name) const;
};

// v_i = i-1, u_i = n+i-1, a = 2n, b = 2n+1. Requires n >= 7.
NamedGraph BuildH(std::uint32_t n);

// The 14 vertices v1,v2,v3,v_{n-2},v_{n-1},v_n,u1,u2,u3,u_{n-2},u_{n-1},u_n,a,b
// of BuildH(n), in that order (which is also ascending).
std::vector<Vertex> GadgetSubset(std::uint32_t n);

// H_7 induced on GadgetSubset(7). Names are positional: v1..v6, u1..u6, a, b.
NamedGraph BuildGadget();

// The gadget induced on v1,v2,v3,u1,u2,u3,a (ids 0..6 in that order).
NamedGraph BuildGadgetPrefix();

// u_i = i-1, v_j = n+j-1, u_i ~ v_j iff i <= j. Requires n >= 1.
NamedGraph BuildHalfGraph(std::uint32_t n);

// ---------------------------------------------------------------------------
// SC trees. Leaves carry the vertices 0..N-1 (each exactly once); an internal
// node carries the set X of vertices, below it, whose internal edges it
// complements.
class SCTree {
 public:
  struct Node {
    std::optional<Vertex> leaf;
    std::vector<int> children;
    std::vector<Vertex> flip_set;  // sorted
  };

  int AddLeaf(Vertex v);
  int AddInternal(std::vector<int> children, std::vector<Vertex> flip_set);
  void set_root(int root) { root_ = root; }

  int root() const { return root_; }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return nodes_.size(); }
  std::size_t LeafCount() const;
  // Levels on the longest root-leaf path; a single leaf has height 1.
  std::uint32_t Height() const;
  // Vertices of the leaves below `id`, sorted.
  std::vector<Vertex> VerticesBelow(int id) const;

  // Every node reachable exactly once from the root, leaves 0..N-1, each
  // flip set inside its node's vertices. Throws InvalidArgument.
  void Validate() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

Graph EvalSCTree(const SCTree& t);
bool InSC(const SCTree& t, std::uint32_t k);

struct DoubledTree {
  SCTree tree;
  Partition partition;
  Flip flip;
};

// `path` is a root-descending list of internal nodes. Copies of vertex v get
// id v+N. The partition has 2^l parts, bit i of a vertex's part set iff it is
// in the flip set of path[i]; the flip holds (p,q) with popcount(p&q) odd.
DoubledTree DoubleSCTree(const SCTree& t, const std::vector<int>& path);

// Random tree of the given height with `leaves` leaves; each internal node
// draws its flip set uniformly.
SCTree RandomSCTree(std::mt19937_64& rng, std::uint32_t leaves, std::uint32_t height);

nlohmann::json ToJson(const SCTree& t);
SCTree SCTreeFromJson(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Clique-width expressions, stored as an operation list where every
// non-vertex operation refers to earlier entries. The last entry is the root.
// Colours are 1-based.
class CliqueExpression {
 public:
  enum class Kind { kVertex, kUnion, kJoin, kRecolor };
  struct Op {
    Kind kind;
    std::uint32_t a = 0, b = 0;  // vertex: colour; join: colours; recolor: from, to
    std::vector<int> args;
  };

  explicit CliqueExpression(std::uint32_t colors = 0) : colors_(colors) {}

  // Each returns the index of the new operation.
  int AddVertex(std::uint32_t color);
  int AddUnion(int left, int right);
  int AddJoin(int arg, std::uint32_t i, std::uint32_t j);
  int AddRecolor(int arg, std::uint32_t from, std::uint32_t to);

  std::uint32_t declared_colors() const { return colors_; }
  const std::vector<Op>& ops() const { return ops_; }
  // Distinct colours mentioned anywhere.
  std::uint32_t Width() const;
  // No union has two arguments that both contain more than one vertex.
  bool IsLinear() const;

 private:
  int Push(Op op);

  std::uint32_t colors_;
  std::vector<Op> ops_;
};

// Vertices are numbered in creation order.
Graph EvalCliqueExpression(const CliqueExpression& e);

// A linear 4-colour expression for H_n (n >= 7).
CliqueExpression HnCliqueExpression(std::uint32_t n);

nlohmann::json ToJson(const CliqueExpression& e);
CliqueExpression CliqueExpressionFromJson(const nlohmann::json& j);

// (single part, {}) if max degree <= d, (single part, {(0,0)}) if the
// complement has max degree <= d, otherwise nullopt.
std::optional<std::pair<Partition, Flip>> DdFlip(const Graph& g, std::uint32_t d);

}  // namespace prescheck

#endif  // PRESCHECK_CONSTRUCTIONS_H_
