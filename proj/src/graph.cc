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

#include "prescheck/graph.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "prescheck/error.h"

namespace prescheck {

std::size_t OrderCap() {
  if (const char* env = std::getenv("PRESCHECK_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

Graph::Graph(std::size_t order) {
  if (order > OrderCap()) {
    throw SizeLimitExceeded("graph order " + std::to_string(order) +
                            " exceeds the order cap " + std::to_string(OrderCap()));
  }
  adjacency_.assign(order, VertexSet(order));
}

Graph Graph::FromEdges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Graph Graph::Complete(std::size_t order) {
  Graph g(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) g.AddEdge(u, v);
  return g;
}

Graph Graph::Path(std::size_t order) {
  Graph g(order);
  for (Vertex v = 0; v + 1 < order; ++v) g.AddEdge(v, v + 1);
  return g;
}

std::size_t Graph::EdgeCount() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.count();
  return twice / 2;
}

std::size_t Graph::MaxDegree() const {
  std::size_t best = 0;
  for (const auto& n : adjacency_) best = std::max(best, n.count());
  return best;
}

void Graph::CheckPair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for order " + std::to_string(order()));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

void Graph::AddEdge(Vertex u, Vertex v) {
  CheckPair(u, v);
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void Graph::RemoveEdge(Vertex u, Vertex v) {
  CheckPair(u, v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

void Graph::ToggleEdge(Vertex u, Vertex v) {
  CheckPair(u, v);
  adjacency_[u].toggle(v);
  adjacency_[v].toggle(u);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    adjacency_[u].ForEach([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::Complement() const {
  Graph g(order());
  for (Vertex u = 0; u < order(); ++u) {
    g.adjacency_[u] = adjacency_[u].Complement();
    g.adjacency_[u].erase(u);
  }
  return g;
}

Partition::Partition(std::size_t k, std::vector<std::uint32_t> part_of)
    : k_(k), part_of_(std::move(part_of)) {
  for (std::size_t v = 0; v < part_of_.size(); ++v) {
    if (part_of_[v] >= k_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " assigned to part " +
                            std::to_string(part_of_[v]) + " but k = " + std::to_string(k_));
    }
  }
}

VertexSet Partition::Members(std::uint32_t part, std::size_t universe) const {
  VertexSet s(universe);
  for (Vertex v = 0; v < part_of_.size() && v < universe; ++v)
    if (part_of_[v] == part) s.insert(v);
  return s;
}

Flip::Flip(std::size_t k,
           std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs)
    : Flip(k) {
  for (const auto& [i, j] : pairs) {
    if (i >= k || j >= k) {
      throw InvalidArgument("flip pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for k = " + std::to_string(k));
    }
    matrix_[i * k + j] = true;
    matrix_[j * k + i] = true;
  }
}

bool Flip::empty() const {
  return std::none_of(matrix_.begin(), matrix_.end(), [](bool b) { return b; });
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Flip::Pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

LabeledStructure::LabeledStructure(Graph g, std::optional<Partition> p,
                                   std::map<std::string, Vertex> c)
    : graph(std::move(g)), parts(std::move(p)), constants(std::move(c)) {
  if (parts && parts->size() != graph.order()) {
    throw InvalidArgument("partition covers " + std::to_string(parts->size()) +
                          " vertices but the graph has " + std::to_string(graph.order()));
  }
  for (const auto& [name, v] : constants) {
    if (v >= graph.order()) throw InvalidArgument("constant @" + name + " out of range");
  }
}

namespace {

void CheckFlipInputs(const Graph& g, const Partition& p, const Flip& f) {
  if (p.k() != f.k()) {
    throw InvalidArgument("partition has k = " + std::to_string(p.k()) +
                          " but flip has k = " + std::to_string(f.k()));
  }
  if (p.size() != g.order()) {
    throw InvalidArgument("partition covers " + std::to_string(p.size()) +
                          " vertices but the graph has " + std::to_string(g.order()));
  }
}

// For each part i, the set of vertices whose part j has (i, j) in F.
std::vector<VertexSet> FlipTargets(const Partition& p, const Flip& f, std::size_t n) {
  std::vector<VertexSet> members;
  members.reserve(p.k());
  for (std::uint32_t j = 0; j < p.k(); ++j) members.push_back(p.Members(j, n));
  std::vector<VertexSet> targets(p.k(), VertexSet(n));
  for (std::uint32_t i = 0; i < p.k(); ++i)
    for (std::uint32_t j = 0; j < p.k(); ++j)
      if (f.contains(i, j)) targets[i] |= members[j];
  return targets;
}

}  // namespace

Graph ApplyFlip(const Graph& g, const Partition& p, const Flip& f) {
  CheckFlipInputs(g, p, f);
  const std::size_t n = g.order();
  auto targets = FlipTargets(p, f, n);
  Graph out = g;
  for (Vertex u = 0; u < n; ++u) {
    targets[p.part(u)].ForEach([&](Vertex v) {
      if (u < v) out.ToggleEdge(u, v);
    });
  }
  return out;
}

Graph FlipSum(const Graph& g, const Partition& p, const Flip& f) {
  CheckFlipInputs(g, p, f);
  const std::size_t n = g.order();
  Graph out = DisjointUnion(g, g);
  auto targets = FlipTargets(p, f, n);
  for (Vertex u = 0; u < n; ++u) {
    targets[p.part(u)].ForEach([&](Vertex v) {
      out.AddEdge(u, static_cast<Vertex>(n + v));
    });
  }
  return out;
}

Graph DisjointUnion(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  Graph out(n + h.order());
  for (const auto& [u, v] : g.Edges()) out.AddEdge(u, v);
  for (const auto& [u, v] : h.Edges())
    out.AddEdge(static_cast<Vertex>(n + u), static_cast<Vertex>(n + v));
  return out;
}

LabeledStructure FlipExpansion(const Graph& g, const Partition& p, const Flip& f) {
  return LabeledStructure(ApplyFlip(g, p, f), p);
}

LabeledStructure DisjointUnion(const LabeledStructure& a, const LabeledStructure& b) {
  if (a.parts.has_value() != b.parts.has_value() ||
      (a.parts && a.parts->k() != b.parts->k())) {
    throw InvalidArgument("disjoint union of structures with different part signatures");
  }
  std::optional<Partition> parts;
  if (a.parts) {
    auto labels = a.parts->parts();
    labels.insert(labels.end(), b.parts->parts().begin(), b.parts->parts().end());
    parts = Partition(a.parts->k(), std::move(labels));
  }
  return LabeledStructure(DisjointUnion(a.graph, b.graph), std::move(parts), a.constants);
}

InducedSubgraph Induce(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order()) {
    // Accept sets over a larger universe as long as members are in range.
    subset.ForEach([&](Vertex v) {
      if (v >= g.order()) throw InvalidArgument("subset vertex " + std::to_string(v) + " out of range");
    });
  }
  InducedSubgraph out;
  out.to_new.assign(g.order(), std::nullopt);
  subset.ForEach([&](Vertex v) {
    out.to_new[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  });
  out.graph = Graph(out.to_original.size());
  for (Vertex i = 0; i < out.to_original.size(); ++i) {
    g.neighbors(out.to_original[i]).ForEach([&](Vertex w) {
      if (w < g.order() && out.to_new[w] && i < *out.to_new[w]) out.graph.AddEdge(i, *out.to_new[w]);
    });
  }
  return out;
}

InducedSubgraph Induce(const Graph& g, std::span<const Vertex> subset) {
  VertexSet s(g.order());
  for (Vertex v : subset) {
    if (v >= g.order()) throw InvalidArgument("subset vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return Induce(g, s);
}

Partition Restrict(const Partition& p, const InducedSubgraph& remap) {
  std::vector<std::uint32_t> labels;
  labels.reserve(remap.to_original.size());
  for (Vertex old : remap.to_original) labels.push_back(p.part(old));
  return Partition(p.k(), std::move(labels));
}

LabeledStructure Induce(const LabeledStructure& s, const VertexSet& subset) {
  auto sub = Induce(s.graph, subset);
  std::optional<Partition> parts;
  if (s.parts) parts = Restrict(*s.parts, sub);
  std::map<std::string, Vertex> constants;
  for (const auto& [name, v] : s.constants)
    if (sub.to_new[v]) constants.emplace(name, *sub.to_new[v]);
  return LabeledStructure(std::move(sub.graph), std::move(parts), std::move(constants));
}

std::vector<std::uint32_t> DistancesFrom(const Graph& g, const VertexSet& sources) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue;
  sources.ForEach([&](Vertex s) {
    if (s < g.order()) {
      dist[s] = 0;
      queue.push_back(s);
    }
  });
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).ForEach([&](Vertex w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::vector<std::uint32_t> DistancesFrom(const Graph& g, Vertex source) {
  return DistancesFrom(g, VertexSet(g.order(), {source}));
}

VertexSet Ball(const Graph& g, const VertexSet& centers, std::uint32_t radius) {
  VertexSet frontier(g.order());
  centers.ForEach([&](Vertex c) {
    if (c >= g.order()) throw InvalidArgument("ball center " + std::to_string(c) + " out of range");
    frontier.insert(c);
  });
  VertexSet reached = frontier;
  for (std::uint32_t step = 0; step < radius && !frontier.empty(); ++step) {
    VertexSet next(g.order());
    frontier.ForEach([&](Vertex u) { next |= g.neighbors(u); });
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

VertexSet Ball(const Graph& g, Vertex center, std::uint32_t radius) {
  if (center >= g.order()) throw InvalidArgument("ball center " + std::to_string(center) + " out of range");
  return Ball(g, VertexSet(g.order(), {center}), radius);
}

bool IsRIndependent(const Graph& g, const VertexSet& members, std::uint32_t radius) {
  bool independent = true;
  members.ForEach([&](Vertex a) {
    if (!independent) return;
    VertexSet near = Ball(g, a, radius);
    near.erase(a);
    if (near.Intersects(members)) independent = false;
  });
  return independent;
}

VertexSet GreedyRIndependentSet(const Graph& g, const VertexSet& candidates, std::uint32_t radius) {
  VertexSet kept(g.order());
  VertexSet blocked(g.order());
  candidates.ForEach([&](Vertex v) {
    if (blocked.contains(v)) return;
    kept.insert(v);
    blocked |= Ball(g, v, radius);
  });
  return kept;
}

}  // namespace prescheck
