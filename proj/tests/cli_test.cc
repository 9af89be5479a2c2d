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


#include "prescheck/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "prescheck/constructions.h"
#include "prescheck/flip_theorem.h"
#include "prescheck/graph_io.h"
#include "prescheck/isomorphism.h"

namespace prescheck {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("prescheck_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Emit(const std::string& name, std::vector<std::string> args) {
    CliRun r = Cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Write(name, r.out);
  }

  fs::path dir_;
};

TEST(Sha256Test, KnownDigests) {
  EXPECT_EQ(Sha256Hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, ConstructedHSevenModelsPhi) {
  std::string h7 = Emit("h7.json", {"construct", "H", "--n", "7"});
  CliRun r = Cli({"check-phi", h7});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("phi holds: true"), std::string::npos);
  CliRun j = Cli({"--json", "check-phi", h7});
  json cert = json::parse(j.out);
  EXPECT_EQ(cert["verdict"], true);
  EXPECT_EQ(cert["witnesses"]["copies"].size(), 1u);
  EXPECT_TRUE(cert["witnesses"]["chains"]["alpha_complete"].get<bool>());
}

TEST_F(CliTest, CheckPhiRefutesCliqueAndLiteralGuard) {
  std::string k5 = Write("k5.json", ToJson(Graph::Complete(5)).dump());
  EXPECT_EQ(Cli({"check-phi", k5}).code, kExitRefuted);
  std::string h7 = Emit("h7.json", {"construct", "H"});
  EXPECT_EQ(Cli({"check-phi", h7, "--v-guard", "literal"}).code, kExitRefuted);
}

TEST_F(CliTest, MinimalModel) {
  std::string h7 = Emit("h7.json", {"construct", "H", "--n", "7"});
  CliRun r = Cli({"minimal-model", h7});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("checked: 16"), std::string::npos);

  Graph bigger = BuildH(7).graph;
  Graph padded(bigger.order() + 1);
  for (auto [u, v] : bigger.Edges()) padded.AddEdge(u, v);
  std::string p = Write("padded.json", ToJson(padded).dump());
  EXPECT_EQ(Cli({"minimal-model", p}).code, kExitRefuted);

  std::string k5 = Write("k5.json", ToJson(Graph::Complete(5)).dump());
  CliRun j = Cli({"--json", "minimal-model", k5});
  EXPECT_EQ(j.code, kExitRefuted);
  EXPECT_EQ(json::parse(j.out)["witnesses"]["model"], false);
}

TEST_F(CliTest, EmbeddingCounts) {
  std::string h7 = Emit("h7.json", {"construct", "H"});
  std::string gadget = Emit("gadget.json", {"construct", "gadget"});
  std::string prefix = Emit("prefix.json", {"construct", "gadget-prefix"});
  EXPECT_EQ(Cli({"embeddings", "--count-only", gadget, h7}).out, "1\n");
  EXPECT_EQ(Cli({"embeddings", "--count-only", prefix, h7}).out, "2\n");
  EXPECT_EQ(Cli({"embeddings", "--count-only", "--limit", "1", prefix, h7}).out, "1\n");
}

TEST_F(CliTest, EmbeddingsAsPairs) {
  std::string k3 = Write("k3.json", ToJson(Graph::Complete(3)).dump());
  CliRun r = Cli({"embeddings", k3, k3});
  ASSERT_EQ(r.code, 0);
  json list = json::parse(r.out);
  ASSERT_EQ(list.size(), 6u);
  for (const auto& e : list) {
    ASSERT_EQ(e.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(e[i][0], i);
  }
}

TEST_F(CliTest, FlipOfClique) {
  std::string k3 = Write("k3.json", R"({"order":3,"edges":[[0,1],[0,2],[1,2]],"partition":[0,0,0],"flip":[[0,0]]})");
  CliRun r = Cli({"flip", k3});
  ASSERT_EQ(r.code, 0) << r.err;
  GraphDocument doc = GraphDocumentFromJson(json::parse(r.out));
  EXPECT_EQ(doc.graph, Graph(3));
  // Overriding the flip with the empty set keeps the clique.
  std::string plain = Write("plain.json", ToJson(Graph::Complete(3)).dump());
  r = Cli({"flip", plain, "--partition", "0,1,1", "--flip", "0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  doc = GraphDocumentFromJson(json::parse(r.out));
  EXPECT_EQ(doc.graph.EdgeCount(), 1u);
  EXPECT_TRUE(doc.graph.adjacent(1, 2));
}

TEST_F(CliTest, FlipSumDoublesOrder) {
  std::string k3 = Write("k3.json", R"({"order":3,"edges":[[0,1],[0,2],[1,2]],"partition":[0,0,1],"flip":[[0,1]]})");
  CliRun r = Cli({"flipsum", k3});
  ASSERT_EQ(r.code, 0) << r.err;
  GraphDocument doc = GraphDocumentFromJson(json::parse(r.out));
  EXPECT_EQ(doc.graph.order(), 6u);
  EXPECT_EQ(doc.partition->parts(), (std::vector<std::uint32_t>{0, 0, 1, 0, 0, 1}));
}

TEST_F(CliTest, EvalExitCodes) {
  std::string p3 = Write("p3.json", R"({"order":3,"edges":[[0,1],[1,2]],"labels":{"mid":1}})");
  EXPECT_EQ(Cli({"eval", p3, "--formula", "exists x. forall y. (not x=y implies E(x,y))"}).code, kExitOk);
  EXPECT_EQ(Cli({"eval", p3, "--formula", "forall x. exists y. E(x,y) and E(y,x) and not x=y and "
                                          "forall z. (E(x,z) implies z=y)"}).code,
            kExitRefuted);
  EXPECT_EQ(Cli({"eval", p3, "--formula", "E(x,@mid)", "--assign", "x=2"}).code, kExitOk);
  EXPECT_EQ(Cli({"eval", p3, "--formula", "E(x,@mid)", "--assign", "x=1", "--reference"}).code, kExitRefuted);
  EXPECT_EQ(Cli({"eval", p3, "--formula", "forall y. (y in $X implies E(x,y))", "--assign", "x=1", "--set",
                 "X=0:2"}).code,
            kExitOk);
  EXPECT_EQ(Cli({"eval", p3, "--formula", "x in $X", "--assign", "x=1", "--set", "X=0:2"}).code, kExitRefuted);
  std::string f = Write("f.txt", "exists x, y. E(x,y)");
  EXPECT_EQ(Cli({"eval", p3, "--formula-file", f}).out, "true\n");
}

TEST_F(CliTest, TranslatedSentenceHoldsOnTheExpansion) {
  std::string g = Write("g.json", R"({"order":4,"edges":[[0,1],[1,2],[2,3]],"partition":[0,1,1,0],"flip":[[0,1],[1,1]]})");
  for (std::string sentence : {"exists x, y, z. E(x,y) and E(y,z) and E(x,z)", "forall x. exists y. E(x,y)",
                               "exists x. forall y. (not x=y implies E(x,y))"}) {
    CliRun t = Cli({"translate", "--formula", sentence, "--k", "2", "--flip", "0:1,1:1"});
    ASSERT_EQ(t.code, 0) << t.err;
    std::string translated = t.out.substr(0, t.out.size() - 1);
    int plain = Cli({"eval", g, "--formula", sentence}).code;
    int expanded = Cli({"eval", g, "--expand", "--formula", translated}).code;
    EXPECT_EQ(plain, expanded) << sentence;
  }
}

TEST_F(CliTest, ConstantsMatchLibrary) {
  CliRun r = Cli({"--json", "constants", "--rho", "2", "--s", "3", "--gamma", "1", "--ell", "2", "--p", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  ConstantSchedule c = TheoremConstants(2, 3, 1, 2, 4);
  json w = json::parse(r.out)["witnesses"];
  EXPECT_EQ(w["q"], c.q);
  EXPECT_EQ(w["d"], c.d);
  EXPECT_EQ(w["n"], c.n);
  EXPECT_EQ(w["m"], c.m);
  EXPECT_EQ(w["r"], c.r);
}

TEST_F(CliTest, CoverOnStar) {
  Graph star(21);
  for (Vertex v = 1; v <= 20; ++v) star.AddEdge(0, v);
  std::string g = Write("star.json", ToJson(star).dump());
  CliRun r = Cli({"cover", g, "--d", "1", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json cert = json::parse(r.out);
  EXPECT_EQ(cert["centers"], json::array({0}));
  EXPECT_TRUE(cert["problems"].empty());
}

TEST_F(CliTest, ScAndCliqueWidthRoundTrips) {
  std::string tree = Emit("tree.json", {"sc", "random", "--leaves", "6", "--height", "3", "--seed", "11"});
  EXPECT_EQ(Cli({"sc", "double", tree, "--route", "0"}).code, kExitOk);
  EXPECT_EQ(Cli({"sc", "double", tree}).code, kExitOk);
  EXPECT_EQ(Cli({"sc", "eval", tree, "--k", "3"}).code, kExitOk);
  EXPECT_EQ(Cli({"sc", "double", tree, "--route", "9"}).code, kExitUsage);

  std::string expr = Emit("expr.json", {"cw", "hn", "--n", "8"});
  CliRun r = Cli({"cw", "eval", expr});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(IsIsomorphic(GraphDocumentFromJson(json::parse(r.out)).graph, BuildH(8).graph));
}

TEST_F(CliTest, RandomisedCommandsNeedSeed) {
  std::string h7 = Emit("h7.json", {"construct", "H"});
  EXPECT_EQ(Cli({"flipflat", h7}).code, kExitUsage);
  EXPECT_EQ(Cli({"preservation-fuzz", "--trials", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"sc", "random"}).code, kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  std::string h7 = Emit("h7.json", {"construct", "H"});
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(Cli({"check-phi"}).code, kExitUsage);
  EXPECT_EQ(Cli({"check-phi", (dir_ / "missing.json").string()}).code, kExitUsage);
  EXPECT_EQ(Cli({"construct", "H", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Cli({"flip", h7, "--partition", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"translate", "--formula", "E(x,y)", "--k", "2", "--flip", "0-1"}).code, kExitUsage);
  CliRun bad = Cli({"eval", h7, "--formula", "exists x. E(x,"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
  std::string junk = Write("junk.json", "{\"order\": 2, \"edges\": [[0, 0]]}");
  EXPECT_EQ(Cli({"check-phi", junk}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, CertificateEchoesCommandAndDigests) {
  std::string h7 = Emit("h7.json", {"construct", "H"});
  std::ifstream in(h7);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::string> args = {"--json", "check-phi", h7};
  json cert = json::parse(Cli(args).out);
  EXPECT_EQ(cert["tool"], "prescheck");
  EXPECT_EQ(cert["command"].get<std::vector<std::string>>(), args);
  ASSERT_EQ(cert["inputs"].size(), 1u);
  EXPECT_EQ(cert["inputs"][0]["sha256"], Sha256Hex(bytes));
  EXPECT_TRUE(cert["seed"].is_null());
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  std::string h10 = Emit("h10.json", {"construct", "H", "--n", "10"});
  std::vector<std::vector<std::string>> commands = {
      {"--json", "preservation-fuzz", "--trials", "12", "--seed", "5", "--bases", "mixed"},
      {"--json", "flipflat", h10, "--k", "3", "--budget", "20", "--seed", "9"},
      {"--json", "sc", "random", "--leaves", "7", "--height", "4", "--seed", "2"},
      {"--json", "cover", h10, "--d", "1", "--n", "3"},
  };
  for (const auto& args : commands) {
    CliRun a = Cli(args), b = Cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  json fuzz = json::parse(Cli(commands[0]).out);
  EXPECT_EQ(fuzz["seed"], 5);
}

TEST_F(CliTest, FlipflatRequiredSize) {
  std::string h7 = Emit("h7.json", {"construct", "H"});
  EXPECT_EQ(Cli({"flipflat", h7, "--k", "2", "--seed", "1", "--m", "3"}).code, kExitOk);
  EXPECT_EQ(Cli({"flipflat", h7, "--k", "2", "--seed", "1", "--m", "15"}).code, kExitRefuted);
}

}  // namespace
}  // namespace prescheck
