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


#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "prescheck/constructions.h"
#include "prescheck/error.h"
#include "prescheck/graph.h"
#include "prescheck/isomorphism.h"
#include "support/oracles.h"

namespace prescheck {
namespace {

TEST(BuildHTest, OrderAndEdgesForSeven) {
  NamedGraph h = BuildH(7);
  EXPECT_EQ(h.graph.order(), 16u);
  EXPECT_EQ(h.graph.EdgeCount(), 59u);
  EXPECT_EQ(h.names.size(), 16u);
}

TEST(BuildHTest, NeighborsOfV1) {
  NamedGraph h = BuildH(7);
  VertexSet expected(16);
  for (int i = 1; i <= 7; ++i) expected.insert(h.at("u" + std::to_string(i)));
  expected.insert(h.at("v2"));
  EXPECT_EQ(h.graph.neighbors(h.at("v1")), expected);
}

TEST(BuildHTest, MatchesIndependentTranscription) {
  for (std::uint32_t n = 7; n <= 14; ++n) EXPECT_EQ(BuildH(n).graph, oracle::HnFromDefinition(n)) << n;
}

TEST(BuildHTest, RejectsSmallN) { EXPECT_THROW(BuildH(6), InvalidArgument); }

TEST(BuildHTest, NamesAreInjective) {
  NamedGraph h = BuildH(9);
  std::set<Vertex> ids;
  for (const auto& [name, v] : h.names) ids.insert(v);
  EXPECT_EQ(ids.size(), h.names.size());
  EXPECT_EQ(ids.size(), h.graph.order());
}

TEST(GadgetTest, OrderAndEdgeCount) {
  NamedGraph g = BuildGadget();
  EXPECT_EQ(g.graph.order(), 14u);
  EXPECT_EQ(g.graph.EdgeCount(), 45u);
}

TEST(GadgetTest, MatchesFigureTranscription) {
  auto edges = oracle::GadgetFigureEdges();
  Graph fig = Graph::FromEdges(14, edges);
  // Same vertex order, so equality rather than isomorphism.
  EXPECT_EQ(BuildGadget().graph, fig);
}

TEST(GadgetTest, InducedCopiesAreIsomorphic) {
  Graph base = BuildGadget().graph;
  for (std::uint32_t n = 7; n <= 12; ++n) {
    NamedGraph h = BuildH(n);
    auto sub = GadgetSubset(n);
    ASSERT_EQ(sub.size(), 14u);
    Graph in = Induce(h.graph, sub).graph;
    EXPECT_TRUE(IsIsomorphic(in, base)) << n;
  }
}

TEST(GadgetTest, SubsetRejectsSmallN) { EXPECT_THROW(GadgetSubset(5), InvalidArgument); }

TEST(GadgetTest, PrefixIsInducedOnFirstSeven) {
  NamedGraph p = BuildGadgetPrefix();
  NamedGraph g = BuildGadget();
  std::vector<Vertex> pick;
  for (const char* name : {"v1", "v2", "v3", "u1", "u2", "u3", "a"}) pick.push_back(g.at(name));
  EXPECT_EQ(p.graph.order(), 7u);
  EXPECT_TRUE(IsIsomorphic(p.graph, Induce(g.graph, std::span<const Vertex>(pick)).graph));
}

TEST(HalfGraphTest, Examples) {
  EXPECT_EQ(BuildHalfGraph(1).graph, Graph::Complete(2));
  EXPECT_EQ(BuildHalfGraph(4).graph.EdgeCount(), 10u);
  for (std::uint32_t n = 1; n <= 8; ++n) {
    NamedGraph h = BuildHalfGraph(n);
    EXPECT_EQ(h.graph.degree(h.at("u1")), n);
  }
}

TEST(SCTreeTest, SmallExamples) {
  SCTree one;
  one.set_root(one.AddLeaf(0));
  EXPECT_EQ(EvalSCTree(one), Graph(1));
  EXPECT_TRUE(InSC(one, 0));

  SCTree both;
  int a = both.AddLeaf(0), b = both.AddLeaf(1);
  both.set_root(both.AddInternal({a, b}, {0, 1}));
  EXPECT_EQ(EvalSCTree(both), Graph::Complete(2));
  EXPECT_TRUE(InSC(both, 1));
  EXPECT_FALSE(InSC(both, 0));

  SCTree none;
  a = none.AddLeaf(0);
  b = none.AddLeaf(1);
  none.set_root(none.AddInternal({a, b}, {}));
  EXPECT_EQ(EvalSCTree(none), Graph(2));
}

TEST(SCTreeTest, ValidateRejectsBadTrees) {
  SCTree t;
  int a = t.AddLeaf(0), b = t.AddLeaf(2);
  t.set_root(t.AddInternal({a, b}, {}));
  EXPECT_THROW(t.Validate(), InvalidArgument);  // leaf ids skip 1

  SCTree u;
  a = u.AddLeaf(0);
  b = u.AddLeaf(1);
  u.set_root(u.AddInternal({a, b}, {5}));
  EXPECT_THROW(u.Validate(), InvalidArgument);
}

TEST(SCTreeTest, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    SCTree t = RandomSCTree(rng, 1 + i % 9, 3);
    SCTree back = SCTreeFromJson(ToJson(t));
    EXPECT_EQ(EvalSCTree(back), EvalSCTree(t));
    EXPECT_EQ(ToJson(back), ToJson(t));
  }
}

TEST(DoubleSCTreeTest, EmptyFlipSetGivesDisjointUnion) {
  SCTree t;
  std::vector<int> kids;
  for (Vertex v = 0; v < 4; ++v) kids.push_back(t.AddLeaf(v));
  t.set_root(t.AddInternal(kids, {}));
  DoubledTree d = DoubleSCTree(t, {t.root()});
  Graph g = EvalSCTree(t);
  EXPECT_EQ(EvalSCTree(d.tree), DisjointUnion(g, g));
  EXPECT_EQ(EvalSCTree(d.tree), FlipSum(g, d.partition, d.flip));
}

TEST(DoubleSCTreeTest, TwoLeavesFlipped) {
  SCTree t;
  int a = t.AddLeaf(0), b = t.AddLeaf(1);
  t.set_root(t.AddInternal({a, b}, {0, 1}));
  DoubledTree d = DoubleSCTree(t, {t.root()});
  Graph doubled = EvalSCTree(d.tree);
  EXPECT_EQ(doubled, FlipSum(Graph::Complete(2), d.partition, d.flip));
  // K_4: the flip-sum joins everything across copies.
  EXPECT_EQ(doubled, Graph::Complete(4));
}

TEST(DoubleSCTreeTest, RandomTreesMatchFlipSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t height = 3 + trial % 2;  // SC(2) and SC(3)
    SCTree t = RandomSCTree(rng, 2 + trial % 10, height);
    // Random root-descending path through internal nodes.
    std::vector<int> path{t.root()};
    while (true) {
      std::vector<int> inner;
      for (int c : t.node(path.back()).children)
        if (!t.node(c).leaf) inner.push_back(c);
      if (inner.empty() || rng() % 2) break;
      path.push_back(inner[rng() % inner.size()]);
    }
    if (t.node(t.root()).leaf) continue;
    DoubledTree d = DoubleSCTree(t, path);
    Graph g = EvalSCTree(t);
    EXPECT_TRUE(IsIsomorphic(EvalSCTree(d.tree), FlipSum(g, d.partition, d.flip))) << trial;
    EXPECT_LE(d.tree.Height(), t.Height());
    EXPECT_EQ(d.tree.LeafCount(), 2 * t.LeafCount());
  }
}

TEST(DoubleSCTreeTest, RejectsBadPaths) {
  SCTree t;
  int a = t.AddLeaf(0), b = t.AddLeaf(1);
  t.set_root(t.AddInternal({a, b}, {}));
  EXPECT_THROW(DoubleSCTree(t, {}), InvalidArgument);
  EXPECT_THROW(DoubleSCTree(t, {a}), InvalidArgument);
  EXPECT_THROW(DoubleSCTree(t, {t.root(), a}), InvalidArgument);
}

TEST(CliqueExpressionTest, SmallExamples) {
  CliqueExpression one(1);
  one.AddVertex(1);
  EXPECT_EQ(EvalCliqueExpression(one), Graph(1));
  EXPECT_EQ(one.Width(), 1u);

  CliqueExpression two(2);
  int x = two.AddVertex(1), y = two.AddVertex(2);
  two.AddJoin(two.AddUnion(x, y), 1, 2);
  EXPECT_EQ(EvalCliqueExpression(two), Graph::Complete(2));
  EXPECT_EQ(two.Width(), 2u);
}

TEST(CliqueExpressionTest, RejectsMalformedTerms) {
  CliqueExpression bad(1);
  bad.AddVertex(2);
  EXPECT_THROW(EvalCliqueExpression(bad), InvalidArgument);

  CliqueExpression reuse(1);
  int x = reuse.AddVertex(1);
  reuse.AddUnion(x, x);
  EXPECT_THROW(EvalCliqueExpression(reuse), InvalidArgument);

  CliqueExpression dangling(1);
  dangling.AddVertex(1);
  dangling.AddVertex(1);
  EXPECT_THROW(EvalCliqueExpression(dangling), InvalidArgument);
}

TEST(CliqueExpressionTest, HnExpressionUsesFourColours) {
  for (std::uint32_t n = 7; n <= 12; ++n) {
    CliqueExpression e = HnCliqueExpression(n);
    EXPECT_LE(e.Width(), 4u);
    EXPECT_EQ(e.Width(), e.declared_colors());
    EXPECT_TRUE(e.IsLinear());
    EXPECT_TRUE(IsIsomorphic(EvalCliqueExpression(e), BuildH(n).graph)) << n;
  }
}

TEST(CliqueExpressionTest, JsonRoundTrip) {
  CliqueExpression e = HnCliqueExpression(8);
  CliqueExpression back = CliqueExpressionFromJson(ToJson(e));
  EXPECT_EQ(ToJson(back), ToJson(e));
  EXPECT_EQ(EvalCliqueExpression(back), EvalCliqueExpression(e));
}

TEST(DdFlipTest, Examples) {
  auto path = DdFlip(Graph::Path(4), 2);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->first.k(), 1u);
  EXPECT_TRUE(path->second.empty());

  auto clique = DdFlip(Graph::Complete(6), 0);
  ASSERT_TRUE(clique);
  EXPECT_TRUE(clique->second.contains(0, 0));

  // Star K_{1,5}: degree 5 and complement degree 5.
  Graph star(6);
  for (Vertex v = 1; v < 6; ++v) star.AddEdge(0, v);
  EXPECT_FALSE(DdFlip(star, 2));
}

// Random graphs of max degree <= 2 via a random permutation cut into paths
// and cycles.
Graph RandomMaxDegreeTwo(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph g(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    if (rng() % 4) g.AddEdge(perm[i], perm[i + 1]);
  return g;
}

TEST(DdFlipTest, ThresholdYieldsIndependentSet) {
  // f_1(3) = (3-1)(2+1)+1 = 7.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t n = 7 + i % 10;
    Graph g = RandomMaxDegreeTwo(rng, n);
    for (Graph h : {g, g.Complement()}) {
      auto pf = DdFlip(h, 2);
      ASSERT_TRUE(pf);
      Graph flipped = ApplyFlip(h, pf->first, pf->second);
      VertexSet a = GreedyRIndependentSet(flipped, flipped.AllVertices(), 1);
      EXPECT_GE(a.count(), 3u);
      EXPECT_TRUE(IsRIndependent(flipped, a, 1));
    }
  }
}

TEST(DdFlipTest, FlipSumStaysInClass) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    Graph g = RandomMaxDegreeTwo(rng, 9);
    for (Graph h : {g, g.Complement()}) {
      auto pf = DdFlip(h, 2);
      ASSERT_TRUE(pf);
      Graph sum = FlipSum(h, pf->first, pf->second);
      EXPECT_TRUE(sum.MaxDegree() <= 2 || sum.Complement().MaxDegree() <= 2);
    }
  }
}

}  // namespace
}  // namespace prescheck
