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

#include <random>

#include <gtest/gtest.h>

#include "prescheck/error.h"
#include "prescheck/evaluate.h"
#include "prescheck/parser.h"
#include "prescheck/transforms.h"
#include "support/oracles.h"

namespace prescheck {
namespace {

Term V(const char* n) { return Term::Var(n); }

TEST(ParserTest, BasicQuantifiers) {
  EXPECT_EQ(ParseFormula("exists x. exists y. E(x,y)"),
            Formula::Exists("x", Formula::Exists("y", Formula::Edge(V("x"), V("y")))));
  EXPECT_EQ(ParseFormula("exists x, y. E(x,y)"), ParseFormula("exists x. exists y. E(x,y)"));
}

TEST(ParserTest, BallGuard) {
  EXPECT_EQ(ParseFormula("forall x in ball(c,1). P_1(x)"),
            Formula::Forall("x", Formula::Implies(Formula::Dist(V("c"), V("x"), 1), Formula::Part(1, V("x")))));
  EXPECT_EQ(ParseFormula("exists x in ball(@c,2). true"),
            Formula::Exists("x", Formula::And(Formula::Dist(Term::Const("c"), V("x"), 2), Formula::True())));
}

TEST(ParserTest, Precedence) {
  Formula a = Formula::Edge(V("a"), V("b"));
  Formula b = Formula::Equal(V("a"), V("b"));
  Formula c = Formula::Part(2, V("a"));
  EXPECT_EQ(ParseFormula("E(a,b) or a=b and P_2(a)"), Formula::Or(a, Formula::And(b, c)));
  EXPECT_EQ(ParseFormula("E(a,b) implies a=b implies P_2(a)"), Formula::Implies(a, Formula::Implies(b, c)));
  EXPECT_EQ(ParseFormula("not E(a,b) xor a=b or P_2(a)"),
            Formula::Or(Formula::Xor(Formula::Not(a), b), c));
  EXPECT_EQ(ParseFormula("a != b"), Formula::Not(b));
  // Quantifier bodies extend right.
  EXPECT_EQ(ParseFormula("E(a,b) and exists x. a=b or P_2(a)"),
            Formula::And(a, Formula::Exists("x", Formula::Or(b, c))));
}

TEST(ParserTest, Errors) {
  try {
    ParseFormula("exists x. E(x,");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
  EXPECT_THROW(ParseFormula("P_0(x)"), ParseError);
  ParseOptions opts;
  opts.max_part = 2;
  EXPECT_THROW(ParseFormula("P_3(x)", opts), ParseError);
  EXPECT_NO_THROW(ParseFormula("P_2(x)", opts));
  EXPECT_THROW(ParseFormula("exists x E(x,x)"), ParseError);
  EXPECT_THROW(ParseFormula("forall x in Nope. true"), ParseError);
  EXPECT_THROW(ParseFormula("x = y ) "), ParseError);
  EXPECT_THROW(ParseFormula("exists! x, y. true"), ParseError);
}

TEST(ParserTest, MacrosExpandWithoutCapture) {
  Formula f = ParseFormula(
      "let adj(p) := exists y. E(p,y);"
      "exists y. adj(y)");
  // The inner y must be renamed away from the argument.
  EXPECT_EQ(FreeVariables(f).size(), 0u);
  std::mt19937_64 rng(4);
  Graph path = Graph::Path(2);
  EXPECT_TRUE(Evaluate(LabeledStructure(path), f));
  EXPECT_FALSE(Evaluate(LabeledStructure(Graph(2)), f));
  Formula leq = ParseFormula(
      "let U(x) := E(x,@v1) and x != @v2;"
      "let leq(x,y) := forall z in U. (E(z,x) implies E(z,y));"
      "leq(p,q)");
  EXPECT_EQ(FreeVariables(leq), (std::set<std::string>{"p", "q"}));
}

TEST(ParserTest, ExistsUniqueDesugars) {
  Formula f = ParseFormula("exists! z. E(x,z)");
  Formula expected = Formula::Exists(
      "z", Formula::And(Formula::Edge(V("x"), V("z")),
                        Formula::Forall("z'", Formula::Implies(Formula::Edge(V("x"), V("z'")),
                                                               Formula::Equal(V("z'"), V("z"))))));
  EXPECT_EQ(f, expected);
  // Exactly-one semantics on a star: centre has many neighbours, leaves one.
  Graph star(4);
  for (Vertex v = 1; v < 4; ++v) star.AddEdge(0, v);
  LabeledStructure s(star);
  EXPECT_FALSE(Evaluate(s, f, {{{"x", 0}}, {}, {}}));
  EXPECT_TRUE(Evaluate(s, f, {{{"x", 1}}, {}, {}}));
}

TEST(ParserTest, ExistsUniqueGuardScopes) {
  // Two neighbours of x; only one of them is in $S. With the guard on both
  // sides that one is unique; with the guard on the witness only it is not.
  Graph g(3);
  g.AddEdge(0, 1);
  g.AddEdge(0, 2);
  Assignment a{{{"x", 0}}, {}, {{"S", VertexSet(3, {1})}}};
  LabeledStructure s(g);
  Formula both = ParseFormula("exists! z in $S. E(x,z)");
  ParseOptions opts;
  opts.unique_guard = UniqueGuard::kWitnessOnly;
  Formula witness = ParseFormula("exists! z in $S. E(x,z)", opts);
  EXPECT_TRUE(Evaluate(s, both, a));
  EXPECT_FALSE(Evaluate(s, witness, a));
  EXPECT_EQ(EvaluateReference(s, witness, a), Evaluate(s, witness, a));
}

TEST(PrinterTest, RoundTripRandom) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    Formula f = oracle::RandomFormula(rng, {"a", "b"}, 3, 3, true);
    EXPECT_EQ(ParseFormula(ToString(f)), f) << ToString(f);
  }
  Formula tricky = Formula::And(Formula::Exists("x", Formula::True()), Formula::False());
  EXPECT_EQ(ParseFormula(ToString(tricky)), tricky);
  Formula m = Formula::Not(Formula::Member(Term::Const("c"), "X"));
  EXPECT_EQ(ParseFormula(ToString(m)), m);
}

TEST(EvaluateTest, Examples) {
  LabeledStructure k3(Graph::Complete(3));
  EXPECT_TRUE(Evaluate(k3, ParseFormula("exists x. exists y. E(x,y)")));
  LabeledStructure empty2(Graph(2));
  Formula far = ParseFormula("exists x. exists y. (x != y and dist(x,y)<=1)");
  EXPECT_FALSE(Evaluate(empty2, far));
  EXPECT_FALSE(EvaluateReference(empty2, far));
}

TEST(EvaluateTest, Errors) {
  LabeledStructure k3(Graph::Complete(3));
  EXPECT_THROW(Evaluate(k3, ParseFormula("E(x,y)")), EvaluationError);
  EXPECT_THROW(EvaluateReference(k3, ParseFormula("exists x. P_1(x)")), EvaluationError);
  EXPECT_THROW(Evaluate(k3, ParseFormula("exists x. x in $X")), EvaluationError);
  EXPECT_THROW(Evaluate(k3, ParseFormula("E(@c,@c)")), EvaluationError);
  LabeledStructure parted(Graph::Complete(3), Partition(2, {0, 1, 1}));
  EXPECT_THROW(Evaluate(parted, ParseFormula("exists x. P_3(x)")), EvaluationError);
  EXPECT_TRUE(Evaluate(parted, ParseFormula("exists x. P_2(x) and not P_1(x)")));
}

TEST(EvaluateTest, ConstantsAndSets) {
  LabeledStructure s(Graph::Path(4), std::nullopt, {{"c", 0}});
  EXPECT_TRUE(Evaluate(s, ParseFormula("forall x in ball(@c,1). (x=@c or E(x,@c))")));
  Assignment a;
  a.constants["c"] = 3;
  a.sets["X"] = VertexSet(4, {0, 1});
  EXPECT_FALSE(Evaluate(s, ParseFormula("exists x in $X. E(x,@c)"), a));
  EXPECT_TRUE(Evaluate(s, ParseFormula("exists x in $X. dist(x,@c)<=2"), a));
}

TEST(EvaluateTest, OptimizedAgreesWithReference) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t n = 1 + t % 7, k = 1 + t % 3;
    LabeledStructure s(oracle::RandomGraph(rng, n, 0.4), oracle::RandomPartition(rng, n, k), {});
    Formula f = oracle::RandomFormula(rng, {}, 3, k, true);
    EXPECT_EQ(Evaluate(s, f), EvaluateReference(s, f)) << ToString(f);
  }
}

TEST(QuantifierRankTest, Examples) {
  EXPECT_EQ(QuantifierRank(ParseFormula("E(x,y)")), 0u);
  EXPECT_EQ(QuantifierRank(ParseFormula("exists x. exists y. E(x,y)")), 2u);
  EXPECT_EQ(QuantifierRank(ParseFormula("dist(x,y)<=3")), 3u);
  EXPECT_EQ(QuantifierRank(ParseFormula("exists x. E(x,x) and forall y, z. y=z")), 3u);
  EXPECT_EQ(QuantifierRank(ParseFormula("(exists x. E(x,x)) and forall y, z. y=z")), 2u);
  EXPECT_EQ(QuantifierRank(ParseFormula("exists x. dist(x,y)<=3")), 4u);
}

TEST(RelativizeTest, Examples) {
  EXPECT_EQ(Relativize(ParseFormula("exists y. E(x,y)"), "x", 1),
            ParseFormula("exists y. (dist(x,y)<=1 and E(x,y))"));
  Formula qf = ParseFormula("E(x,y) and not x=y");
  EXPECT_EQ(Relativize(qf, "x", 2), qf);
  // A bound variable named like the centre is renamed.
  Formula g = Relativize(ParseFormula("E(x,x) or exists x. E(x,x)"), "x", 1);
  EXPECT_EQ(FreeVariables(g), (std::set<std::string>{"x"}));
}

// Evaluating psi^{N_r(x)} at v equals evaluating psi at v inside G[ball(v,r)].
TEST(RelativizeTest, LocalityAgainstInducedBall) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 1000; ++t) {
    std::uint32_t n = 2 + t % 9, r = t % 4;
    Graph g = oracle::RandomGraph(rng, n, 0.25);
    Formula psi = oracle::RandomFormula(rng, {"x"}, 2);
    Vertex v = static_cast<Vertex>(rng() % n);
    bool on_g = Evaluate(LabeledStructure(g), Relativize(psi, "x", r), {{{"x", v}}, {}, {}});
    InducedSubgraph ball = Induce(g, Ball(g, v, r));
    bool on_ball = EvaluateReference(LabeledStructure(ball.graph), psi, {{{"x", *ball.to_new[v]}}, {}, {}});
    ASSERT_EQ(on_g, on_ball) << ToString(psi);
    EXPECT_LE(QuantifierRank(Relativize(psi, "x", r)), QuantifierRank(psi) + r);
  }
}

TEST(RelativizeTest, ToSetAgainstInducedIntersection) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    std::uint32_t n = 2 + t % 9, r = t % 3;
    Graph g = oracle::RandomGraph(rng, n, 0.3);
    Formula xi = oracle::RandomFormula(rng, {"x"}, 2);
    Vertex v = static_cast<Vertex>(rng() % n);
    VertexSet x(n);
    for (Vertex w = 0; w < n; ++w)
      if (w == v || rng() % 3) x.insert(w);
    Assignment a{{{"x", v}}, {}, {{"X", x}}};
    bool on_g = Evaluate(LabeledStructure(g), RelativizeToSet(xi, "x", r, "X"), a);
    InducedSubgraph sub = Induce(g, Ball(g, v, r) & x);
    bool on_sub = EvaluateReference(LabeledStructure(sub.graph), xi, {{{"x", *sub.to_new[v]}}, {}, {}});
    ASSERT_EQ(on_g, on_sub) << ToString(xi);
    // X = everything agrees with plain relativization.
    Assignment all{{{"x", v}}, {}, {{"X", VertexSet::Full(n)}}};
    EXPECT_EQ(Evaluate(LabeledStructure(g), RelativizeToSet(xi, "x", r, "X"), all),
              Evaluate(LabeledStructure(g), Relativize(xi, "x", r), all));
  }
  Formula needs = ParseFormula("exists y. E(x,y)");
  Assignment none{{{"x", 0}}, {}, {{"X", VertexSet(3)}}};
  EXPECT_FALSE(Evaluate(LabeledStructure(Graph::Complete(3)), RelativizeToSet(needs, "x", 1, "X"), none));
}

TEST(TranslateFlipTest, Examples) {
  Formula phi = ParseFormula("exists x. exists y. E(x,y)");
  EXPECT_EQ(TranslateFlip(phi, 2, Flip(2)), phi);
  EXPECT_EQ(TranslateFlip(phi, 1, Flip(1, {{0, 0}}), FlipTranslation::kLiteral),
            ParseFormula("exists x. exists y. (E(x,y) xor (P_1(x) and P_1(y)))"));
  EXPECT_EQ(TranslateFlip(phi, 1, Flip(1, {{0, 0}})),
            ParseFormula("exists x. exists y. (E(x,y) xor (P_1(x) and P_1(y) and x != y))"));
  EXPECT_THROW(TranslateFlip(ParseFormula("P_1(x)"), 1, Flip(1)), InvalidArgument);
  EXPECT_THROW(TranslateFlip(phi, 2, Flip(1)), InvalidArgument);
}

TEST(TranslateFlipTest, LiteralFormBreaksOnDiagonalPairs) {
  Formula phi = ParseFormula("exists x. exists y. E(x,y)");
  Graph k1(1);
  Partition p = Partition::Single(1);
  Flip f(1, {{0, 0}});
  LabeledStructure expanded = FlipExpansion(k1, p, f);
  EXPECT_FALSE(Evaluate(LabeledStructure(k1), phi));
  EXPECT_TRUE(Evaluate(expanded, TranslateFlip(phi, 1, f, FlipTranslation::kLiteral)));
  EXPECT_FALSE(Evaluate(expanded, TranslateFlip(phi, 1, f)));
}

TEST(TranslateFlipTest, SemanticEquivalence) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    std::uint32_t n = 1 + t % 8, k = 1 + t % 3;
    Graph g = oracle::RandomGraph(rng, n, 0.5);
    Partition p = oracle::RandomPartition(rng, n, k);
    Flip f = oracle::RandomFlip(rng, k);
    Formula phi = oracle::RandomFormula(rng, {}, 3);
    ASSERT_EQ(Evaluate(LabeledStructure(g), phi), Evaluate(FlipExpansion(g, p, f), TranslateFlip(phi, k, f)))
        << ToString(phi);
  }
}

TEST(BasicLocalTest, Examples) {
  BasicLocalSentence one{1, 0, Formula::True(), "x"};
  EXPECT_TRUE(EvalBasicLocal(LabeledStructure(Graph(1)), one));
  BasicLocalSentence two{2, 1, Formula::True(), "x"};
  EXPECT_FALSE(EvalBasicLocal(LabeledStructure(Graph::Complete(3)), two));
  EXPECT_TRUE(EvalBasicLocal(LabeledStructure(Graph::Path(4)), two));
}

TEST(BasicLocalTest, AgreesWithExpandedSentence) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    std::uint32_t n = 1 + t % 8;
    Graph g = oracle::RandomGraph(rng, n, 0.2);
    BasicLocalSentence b{1 + static_cast<std::uint32_t>(t % 3), static_cast<std::uint32_t>(t % 2),
                         oracle::RandomFormula(rng, {"x"}, 1), "x"};
    LabeledStructure s(g);
    ASSERT_EQ(EvalBasicLocal(s, b), Evaluate(s, ToFormula(b))) << ToString(ToFormula(b));
  }
}

bool HasInducedP3(const Graph& g) {
  const auto n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = a + 1; c < n; ++c)
        if (b != a && b != c && g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c)) return true;
  return false;
}

TEST(ExistentialFromModelsTest, Examples) {
  EXPECT_THROW(ExistentialFromModels({}), InvalidArgument);
  Formula edge = ExistentialFromModels({Graph::Complete(2)});
  Formula triangle = ExistentialFromModels({Graph::Complete(3)});
  for (std::uint32_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::AllGraphs(n)) {
      LabeledStructure s(g);
      EXPECT_EQ(Evaluate(s, edge), g.EdgeCount() > 0);
      EXPECT_EQ(Evaluate(s, triangle), oracle::BruteEmbeddingCount(Graph::Complete(3), g) > 0);
    }
  }
}

TEST(ExistentialFromModelsTest, InducedPathFromMinimalModels) {
  std::vector<Graph> minimal;
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::NonIsomorphicGraphs(n)) {
      if (!HasInducedP3(g)) continue;
      bool smaller = false;
      for (Vertex v = 0; v < n && !smaller; ++v) {
        VertexSet keep = VertexSet::Full(n);
        keep.erase(v);
        smaller = HasInducedP3(Induce(g, keep).graph);
      }
      if (!smaller) minimal.push_back(g);
    }
  }
  ASSERT_EQ(minimal.size(), 1u);
  Formula psi = ExistentialFromModels(minimal);
  CompiledFormula compiled(psi);
  for (std::uint32_t n = 0; n <= 6; ++n)
    for (const Graph& g : oracle::AllGraphs(n)) ASSERT_EQ(compiled.Evaluate(LabeledStructure(g)), HasInducedP3(g));
}

TEST(ExistentialFromModelsTest, PreservedByExtensions) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    Formula psi = ExistentialFromModels({oracle::RandomGraph(rng, 3, 0.5), oracle::RandomGraph(rng, 4, 0.5)});
    Graph h = oracle::RandomGraph(rng, 8, 0.5);
    VertexSet keep(8);
    for (Vertex v = 0; v < 8; ++v)
      if (rng() & 1) keep.insert(v);
    Graph g = Induce(h, keep).graph;
    if (Evaluate(LabeledStructure(g), psi)) EXPECT_TRUE(Evaluate(LabeledStructure(h), psi));
  }
}

}  // namespace
}  // namespace prescheck
