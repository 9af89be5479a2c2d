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

#include "prescheck/constructions.h"

#include <algorithm>
#include <bit>
#include <set>

#include "prescheck/error.h"

namespace prescheck {

Vertex NamedGraph::at(const std::string& name) const {
  auto it = names.find(name);
  if (it == names.end()) throw InvalidArgument("no vertex named '" + name + "'");
  return it->second;
}

NamedGraph BuildH(std::uint32_t n) {
  if (n < 7) throw InvalidArgument("H_n needs n >= 7");
  NamedGraph h{Graph(2 * n + 2), {}};
  auto v = [](std::uint32_t i) -> Vertex { return i - 1; };
  auto u = [n](std::uint32_t i) -> Vertex { return n + i - 1; };
  const Vertex a = 2 * n, b = 2 * n + 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    h.names["v" + std::to_string(i)] = v(i);
    h.names["u" + std::to_string(i)] = u(i);
  }
  h.names["a"] = a;
  h.names["b"] = b;
  Graph& g = h.graph;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i; j <= n; ++j) g.AddEdge(v(i), u(j));
    if (i < n) g.AddEdge(v(i), v(i + 1));
    // u_i ~ u_j unless they are consecutive.
    for (std::uint32_t j = i + 2; j <= n; ++j) g.AddEdge(u(i), u(j));
    if (i >= 2) g.AddEdge(a, u(i));
    if (i >= n - 1) g.AddEdge(b, u(i));
  }
  g.AddEdge(a, v(2));
  g.AddEdge(b, v(n - 1));
  return h;
}

std::vector<Vertex> GadgetSubset(std::uint32_t n) {
  if (n < 7) throw InvalidArgument("I_n needs n >= 7");
  std::vector<Vertex> out;
  for (std::uint32_t i : {1u, 2u, 3u, n - 2, n - 1, n}) out.push_back(i - 1);
  for (std::uint32_t i : {1u, 2u, 3u, n - 2, n - 1, n}) out.push_back(n + i - 1);
  out.push_back(2 * n);
  out.push_back(2 * n + 1);
  return out;
}

NamedGraph BuildGadget() {
  auto sub = GadgetSubset(7);
  NamedGraph g{Induce(BuildH(7).graph, std::span<const Vertex>(sub)).graph, {}};
  for (Vertex i = 0; i < 6; ++i) {
    g.names["v" + std::to_string(i + 1)] = i;
    g.names["u" + std::to_string(i + 1)] = 6 + i;
  }
  g.names["a"] = 12;
  g.names["b"] = 13;
  return g;
}

NamedGraph BuildGadgetPrefix() {
  NamedGraph gadget = BuildGadget();
  std::vector<Vertex> keep = {0, 1, 2, 6, 7, 8, 12};
  NamedGraph p{Induce(gadget.graph, std::span<const Vertex>(keep)).graph, {}};
  const char* names[] = {"v1", "v2", "v3", "u1", "u2", "u3", "a"};
  for (Vertex i = 0; i < 7; ++i) p.names[names[i]] = i;
  return p;
}

NamedGraph BuildHalfGraph(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("half-graph order must be positive");
  NamedGraph h{Graph(2 * n), {}};
  for (std::uint32_t i = 1; i <= n; ++i) {
    h.names["u" + std::to_string(i)] = i - 1;
    h.names["v" + std::to_string(i)] = n + i - 1;
    for (std::uint32_t j = i; j <= n; ++j) h.graph.AddEdge(i - 1, n + j - 1);
  }
  return h;
}

// ---------------------------------------------------------------------------

int SCTree::AddLeaf(Vertex v) {
  nodes_.push_back(Node{v, {}, {}});
  return static_cast<int>(nodes_.size() - 1);
}

int SCTree::AddInternal(std::vector<int> children, std::vector<Vertex> flip_set) {
  std::sort(flip_set.begin(), flip_set.end());
  flip_set.erase(std::unique(flip_set.begin(), flip_set.end()), flip_set.end());
  nodes_.push_back(Node{std::nullopt, std::move(children), std::move(flip_set)});
  return static_cast<int>(nodes_.size() - 1);
}

std::size_t SCTree::LeafCount() const {
  std::size_t c = 0;
  for (const auto& n : nodes_) c += n.leaf.has_value();
  return c;
}

std::uint32_t SCTree::Height() const {
  auto rec = [&](auto& self, int id) -> std::uint32_t {
    std::uint32_t best = 0;
    for (int c : node(id).children) best = std::max(best, self(self, c));
    return best + 1;
  };
  return root_ < 0 ? 0 : rec(rec, root_);
}

std::vector<Vertex> SCTree::VerticesBelow(int id) const {
  std::vector<Vertex> out;
  auto rec = [&](auto& self, int x) -> void {
    if (node(x).leaf) out.push_back(*node(x).leaf);
    for (int c : node(x).children) self(self, c);
  };
  rec(rec, id);
  std::sort(out.begin(), out.end());
  return out;
}

void SCTree::Validate() const {
  if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) throw InvalidArgument("SC tree has no root");
  std::vector<int> seen(nodes_.size(), 0);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) throw InvalidArgument("SC tree child out of range");
    if (seen[id]++) throw InvalidArgument("SC tree node reached twice");
    const Node& n = nodes_[id];
    if (n.leaf && !n.children.empty()) throw InvalidArgument("SC tree leaf with children");
    if (!n.leaf && n.children.empty()) throw InvalidArgument("SC tree internal node without children");
    for (int c : n.children) stack.push_back(c);
  }
  std::vector<Vertex> leaves = VerticesBelow(root_);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != i) throw InvalidArgument("SC tree leaves must be the vertices 0..N-1, each once");
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (!seen[id] || nodes_[id].leaf) continue;
    auto below = VerticesBelow(static_cast<int>(id));
    if (!std::includes(below.begin(), below.end(), nodes_[id].flip_set.begin(), nodes_[id].flip_set.end()))
      throw InvalidArgument("flip set is not inside the node's vertices");
  }
}

Graph EvalSCTree(const SCTree& t) {
  t.Validate();
  Graph g(t.LeafCount());
  // Children's vertex sets are disjoint, so complementing inside X on the
  // whole graph equals flipping the disjoint union at that node.
  auto rec = [&](auto& self, int id) -> void {
    const auto& n = t.node(id);
    for (int c : n.children) self(self, c);
    for (std::size_t i = 0; i < n.flip_set.size(); ++i)
      for (std::size_t j = i + 1; j < n.flip_set.size(); ++j) g.ToggleEdge(n.flip_set[i], n.flip_set[j]);
  };
  rec(rec, t.root());
  return g;
}

bool InSC(const SCTree& t, std::uint32_t k) { return t.Height() <= k + 1; }

DoubledTree DoubleSCTree(const SCTree& t, const std::vector<int>& path) {
  t.Validate();
  if (path.empty() || path.front() != t.root()) throw InvalidArgument("path must start at the root");
  if (path.size() > 20) throw SizeLimitExceeded("path too long for 2^l parts");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || static_cast<std::size_t>(path[i]) >= t.size() || t.node(path[i]).leaf)
      throw InvalidArgument("path nodes must be internal nodes");
    if (i + 1 < path.size()) {
      const auto& kids = t.node(path[i]).children;
      if (std::find(kids.begin(), kids.end(), path[i + 1]) == kids.end())
        throw InvalidArgument("path is not root-descending");
    }
  }
  const Vertex n = static_cast<Vertex>(t.LeafCount());
  SCTree out;
  // Copies a subtree; `shift` is added to every vertex id.
  auto copy = [&](auto& self, int id, Vertex shift) -> int {
    const auto& node = t.node(id);
    if (node.leaf) return out.AddLeaf(*node.leaf + shift);
    std::vector<int> kids;
    for (int c : node.children) kids.push_back(self(self, c, shift));
    std::vector<Vertex> x;
    for (Vertex v : node.flip_set) x.push_back(v + shift);
    return out.AddInternal(kids, x);
  };
  std::set<int> on_path(path.begin(), path.end());
  auto build = [&](auto& self, int id) -> int {
    const auto& node = t.node(id);
    if (!on_path.count(id)) return copy(copy, id, 0);
    std::vector<int> kids;
    for (int c : node.children) kids.push_back(self(self, c));
    for (int c : node.children)
      if (!on_path.count(c)) kids.push_back(copy(copy, c, n));
    std::vector<Vertex> x = node.flip_set;
    for (Vertex v : node.flip_set) x.push_back(v + n);
    return out.AddInternal(kids, x);
  };
  out.set_root(build(build, t.root()));

  const std::size_t l = path.size();
  std::vector<std::uint32_t> part_of(n, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (Vertex v : t.node(path[i]).flip_set) part_of[v] |= 1u << i;
  const std::uint32_t parts = 1u << l;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t p = 0; p < parts; ++p)
    for (std::uint32_t q = p; q < parts; ++q)
      if (std::popcount(p & q) % 2 == 1) pairs.emplace_back(p, q);
  return DoubledTree{std::move(out), Partition(parts, part_of), Flip(parts, pairs)};
}

SCTree RandomSCTree(std::mt19937_64& rng, std::uint32_t leaves, std::uint32_t height) {
  if (leaves == 0 || height == 0) throw InvalidArgument("need at least one leaf and one level");
  if (height == 1 && leaves != 1) throw InvalidArgument("a height-1 tree is a single leaf");
  SCTree t;
  std::bernoulli_distribution coin(0.5);
  // Splits the vertex range [lo, hi) among children, at most `levels` deep.
  auto rec = [&](auto& self, Vertex lo, Vertex hi, std::uint32_t levels) -> int {
    if (hi - lo == 1 && (levels == 1 || coin(rng))) return t.AddLeaf(lo);
    std::vector<int> kids;
    if (levels == 2) {
      for (Vertex v = lo; v < hi; ++v) kids.push_back(t.AddLeaf(v));
    } else {
      Vertex at = lo;
      while (at < hi) {
        Vertex len = std::uniform_int_distribution<Vertex>(1, hi - at)(rng);
        if (at == lo && len == hi - lo && hi - lo > 1) len = std::max<Vertex>(1, len / 2);
        kids.push_back(self(self, at, at + len, levels - 1));
        at += len;
      }
    }
    std::vector<Vertex> x;
    for (Vertex v = lo; v < hi; ++v)
      if (coin(rng)) x.push_back(v);
    return t.AddInternal(kids, x);
  };
  t.set_root(rec(rec, 0, leaves, height));
  return t;
}

nlohmann::json ToJson(const SCTree& t) {
  auto rec = [&](auto& self, int id) -> nlohmann::json {
    const auto& n = t.node(id);
    if (n.leaf) return {{"leaf", *n.leaf}};
    nlohmann::json kids = nlohmann::json::array();
    for (int c : n.children) kids.push_back(self(self, c));
    return {{"flip", n.flip_set}, {"children", kids}};
  };
  return rec(rec, t.root());
}

SCTree SCTreeFromJson(const nlohmann::json& j) {
  SCTree t;
  auto rec = [&](auto& self, const nlohmann::json& node) -> int {
    if (!node.is_object()) throw InvalidArgument("SC tree node must be an object");
    if (node.contains("leaf")) return t.AddLeaf(node.at("leaf").get<Vertex>());
    if (!node.contains("children")) throw InvalidArgument("SC tree node needs 'leaf' or 'children'");
    std::vector<int> kids;
    for (const auto& c : node.at("children")) kids.push_back(self(self, c));
    std::vector<Vertex> x;
    if (node.contains("flip")) x = node.at("flip").get<std::vector<Vertex>>();
    return t.AddInternal(kids, x);
  };
  try {
    t.set_root(rec(rec, j));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad SC tree: ") + e.what());
  }
  t.Validate();
  return t;
}

// ---------------------------------------------------------------------------

int CliqueExpression::Push(Op op) {
  for (int a : op.args)
    if (a < 0 || static_cast<std::size_t>(a) >= ops_.size()) throw InvalidArgument("operation refers forward");
  ops_.push_back(std::move(op));
  return static_cast<int>(ops_.size() - 1);
}

int CliqueExpression::AddVertex(std::uint32_t color) { return Push({Kind::kVertex, color, 0, {}}); }
int CliqueExpression::AddUnion(int left, int right) { return Push({Kind::kUnion, 0, 0, {left, right}}); }
int CliqueExpression::AddJoin(int arg, std::uint32_t i, std::uint32_t j) {
  if (i == j) throw InvalidArgument("join needs two different colours");
  return Push({Kind::kJoin, i, j, {arg}});
}
int CliqueExpression::AddRecolor(int arg, std::uint32_t from, std::uint32_t to) {
  return Push({Kind::kRecolor, from, to, {arg}});
}

std::uint32_t CliqueExpression::Width() const {
  std::set<std::uint32_t> used;
  for (const auto& op : ops_) {
    switch (op.kind) {
      case Kind::kVertex:
        used.insert(op.a);
        break;
      case Kind::kJoin:
      case Kind::kRecolor:
        used.insert(op.a);
        used.insert(op.b);
        break;
      case Kind::kUnion:
        break;
    }
  }
  return static_cast<std::uint32_t>(used.size());
}

bool CliqueExpression::IsLinear() const {
  std::vector<std::size_t> size(ops_.size(), 0);
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto& op = ops_[i];
    if (op.kind == Kind::kVertex) {
      size[i] = 1;
    } else if (op.kind == Kind::kUnion) {
      if (size[op.args[0]] > 1 && size[op.args[1]] > 1) return false;
      size[i] = size[op.args[0]] + size[op.args[1]];
    } else {
      size[i] = size[op.args[0]];
    }
  }
  return true;
}

Graph EvalCliqueExpression(const CliqueExpression& e) {
  const auto& ops = e.ops();
  if (ops.empty()) throw InvalidArgument("empty clique expression");
  auto check = [&](std::uint32_t c) {
    if (c == 0 || c > e.declared_colors())
      throw InvalidArgument("colour " + std::to_string(c) + " outside 1.." + std::to_string(e.declared_colors()));
  };
  std::vector<int> uses(ops.size(), 0);
  std::size_t order = 0;
  for (const auto& op : ops) {
    for (int a : op.args)
      if (uses[a]++) throw InvalidArgument("clique expression reuses a subterm");
    if (op.kind == CliqueExpression::Kind::kVertex) {
      check(op.a);
      ++order;
    } else if (op.kind != CliqueExpression::Kind::kUnion) {
      check(op.a);
      check(op.b);
    }
  }
  for (std::size_t i = 0; i + 1 < ops.size(); ++i)
    if (!uses[i]) throw InvalidArgument("operation " + std::to_string(i) + " is not used by the root");
  Graph g(order);
  // Each subterm: its vertices with their current colours.
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> value(ops.size());
  Vertex next = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    auto& out = value[i];
    switch (op.kind) {
      case CliqueExpression::Kind::kVertex:
        out.emplace_back(next++, op.a);
        break;
      case CliqueExpression::Kind::kUnion:
        out = std::move(value[op.args[0]]);
        out.insert(out.end(), value[op.args[1]].begin(), value[op.args[1]].end());
        value[op.args[1]].clear();
        break;
      case CliqueExpression::Kind::kJoin:
        out = std::move(value[op.args[0]]);
        for (auto [x, cx] : out)
          for (auto [y, cy] : out)
            if (x < y && ((cx == op.a && cy == op.b) || (cx == op.b && cy == op.a)) && !g.adjacent(x, y))
              g.AddEdge(x, y);
        break;
      case CliqueExpression::Kind::kRecolor:
        out = std::move(value[op.args[0]]);
        for (auto& [x, c] : out)
          if (c == op.a) c = op.b;
        break;
    }
  }
  return g;
}

CliqueExpression HnCliqueExpression(std::uint32_t n) {
  if (n < 7) throw InvalidArgument("H_n needs n >= 7");
  // Colours: 1 = attached to every later u, 2 = the v waiting for its
  // successor, 3 = the u (or u's) not yet finished, 4 = the new vertex.
  CliqueExpression e(4);
  int t = e.AddVertex(1);                 // v1
  t = e.AddUnion(t, e.AddVertex(2));      // v2
  t = e.AddJoin(t, 1, 2);
  t = e.AddUnion(t, e.AddVertex(3));      // a
  t = e.AddJoin(t, 3, 2);
  t = e.AddUnion(t, e.AddVertex(4));      // v3
  t = e.AddJoin(t, 4, 2);
  t = e.AddRecolor(t, 2, 3);
  t = e.AddUnion(t, e.AddVertex(2));      // u1
  t = e.AddJoin(t, 2, 1);
  t = e.AddRecolor(t, 1, 3);
  t = e.AddRecolor(t, 3, 1);
  t = e.AddRecolor(t, 2, 3);
  t = e.AddRecolor(t, 4, 2);
  // Now 1 = {v1, v2, a}, 2 = {v3}, 3 = {u1}.
  for (std::uint32_t j = 2; j + 3 <= n; ++j) {
    t = e.AddUnion(t, e.AddVertex(4));    // u_j
    t = e.AddJoin(t, 4, 1);
    t = e.AddRecolor(t, 3, 1);
    t = e.AddRecolor(t, 4, 3);
    t = e.AddUnion(t, e.AddVertex(4));    // v_{j+2}
    t = e.AddJoin(t, 4, 2);
    t = e.AddRecolor(t, 2, 1);
    t = e.AddRecolor(t, 4, 2);
  }
  t = e.AddUnion(t, e.AddVertex(4));      // u_{n-2}
  t = e.AddJoin(t, 4, 1);
  t = e.AddRecolor(t, 3, 1);
  t = e.AddRecolor(t, 4, 3);
  t = e.AddUnion(t, e.AddVertex(4));      // u_{n-1}
  t = e.AddJoin(t, 4, 1);
  t = e.AddJoin(t, 4, 2);
  t = e.AddRecolor(t, 3, 1);
  t = e.AddRecolor(t, 4, 3);
  t = e.AddUnion(t, e.AddVertex(4));      // v_n
  t = e.AddJoin(t, 4, 2);
  t = e.AddRecolor(t, 4, 1);
  t = e.AddUnion(t, e.AddVertex(4));      // u_n
  t = e.AddJoin(t, 4, 1);
  t = e.AddJoin(t, 4, 2);
  t = e.AddRecolor(t, 4, 3);
  t = e.AddUnion(t, e.AddVertex(4));      // b
  t = e.AddJoin(t, 4, 2);
  e.AddJoin(t, 4, 3);
  return e;
}

nlohmann::json ToJson(const CliqueExpression& e) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : e.ops()) {
    switch (op.kind) {
      case CliqueExpression::Kind::kVertex:
        ops.push_back({{"op", "vertex"}, {"color", op.a}});
        break;
      case CliqueExpression::Kind::kUnion:
        ops.push_back({{"op", "union"}, {"args", op.args}});
        break;
      case CliqueExpression::Kind::kJoin:
        ops.push_back({{"op", "join"}, {"args", op.args}, {"colors", {op.a, op.b}}});
        break;
      case CliqueExpression::Kind::kRecolor:
        ops.push_back({{"op", "recolor"}, {"args", op.args}, {"from", op.a}, {"to", op.b}});
        break;
    }
  }
  return {{"colors", e.declared_colors()}, {"operations", ops}};
}

CliqueExpression CliqueExpressionFromJson(const nlohmann::json& j) {
  try {
    CliqueExpression e(j.at("colors").get<std::uint32_t>());
    for (const auto& op : j.at("operations")) {
      std::string kind = op.at("op").get<std::string>();
      if (kind == "vertex") {
        e.AddVertex(op.at("color").get<std::uint32_t>());
      } else if (kind == "union") {
        auto args = op.at("args").get<std::vector<int>>();
        if (args.size() != 2) throw InvalidArgument("union takes two arguments");
        e.AddUnion(args[0], args[1]);
      } else if (kind == "join") {
        auto args = op.at("args").get<std::vector<int>>();
        auto colors = op.at("colors").get<std::vector<std::uint32_t>>();
        if (args.size() != 1 || colors.size() != 2) throw InvalidArgument("join takes one argument, two colours");
        e.AddJoin(args[0], colors[0], colors[1]);
      } else if (kind == "recolor") {
        auto args = op.at("args").get<std::vector<int>>();
        if (args.size() != 1) throw InvalidArgument("recolor takes one argument");
        e.AddRecolor(args[0], op.at("from").get<std::uint32_t>(), op.at("to").get<std::uint32_t>());
      } else {
        throw InvalidArgument("unknown operation '" + kind + "'");
      }
    }
    return e;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad clique expression: ") + e.what());
  }
}

std::optional<std::pair<Partition, Flip>> DdFlip(const Graph& g, std::uint32_t d) {
  Partition single = Partition::Single(g.order());
  if (g.MaxDegree() <= d) return std::make_pair(single, Flip(1));
  std::size_t min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) min_degree = std::min(min_degree, g.degree(v));
  // Degree of v in the complement is order-1-degree(v).
  if (g.order() - 1 - min_degree <= d) return std::make_pair(single, Flip(1, {{0, 0}}));
  return std::nullopt;
}

}  // namespace prescheck
