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

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prescheck/constructions.h"
#include "prescheck/embedding.h"
#include "prescheck/error.h"
#include "prescheck/evaluate.h"
#include "prescheck/flip_theorem.h"
#include "prescheck/formula.h"
#include "prescheck/graph.h"
#include "prescheck/graph_io.h"
#include "prescheck/isomorphism.h"
#include "prescheck/parser.h"
#include "prescheck/phi.h"
#include "prescheck/transforms.h"

namespace prescheck {

using nlohmann::json;

std::string Sha256Hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

namespace {

// Everything a handler needs to read inputs and report.
class Session {
 public:
  Session(std::vector<std::string> args, std::ostream& out) : args_(std::move(args)), out_(out) {}

  bool json_mode = false;
  std::optional<std::uint64_t> seed;

  std::string ReadFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    inputs_.push_back({{"path", path}, {"sha256", Sha256Hex(bytes)}});
    return bytes;
  }

  void NoteText(const std::string& name, const std::string& text) {
    inputs_.push_back({{"text", name}, {"sha256", Sha256Hex(text)}});
  }

  GraphDocument LoadGraph(const std::string& path) { return ParseGraphText(ReadFile(path)); }

  json LoadJson(const std::string& path) {
    std::string bytes = ReadFile(path);
    try {
      return json::parse(bytes);
    } catch (const json::exception& e) {
      throw InvalidArgument(path + ": " + e.what());
    }
  }

  // Prints either the plain text or the certificate and returns `code`.
  int Finish(std::optional<bool> verdict, const json& witnesses, const std::string& plain, int code) {
    if (!json_mode) {
      out_ << plain;
      return code;
    }
    json cert;
    cert["tool"] = "prescheck";
    cert["version"] = PRESCHECK_VERSION;
    cert["command"] = args_;
    cert["inputs"] = inputs_;
    cert["seed"] = seed ? json(*seed) : json(nullptr);
    cert["verdict"] = verdict ? json(*verdict) : json(nullptr);
    cert["witnesses"] = witnesses;
    out_ << cert.dump(2) << "\n";
    return code;
  }

 private:
  std::vector<std::string> args_;
  std::ostream& out_;
  json inputs_ = json::array();
};

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json PairsJson(const Flip& f) {
  json out = json::array();
  for (auto [i, j] : f.Pairs())
    if (i <= j) out.push_back({i, j});
  return out;
}

// "0:1,1:1" -> pairs.
Flip ParseFlip(const std::string& text, std::size_t k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("flip pairs look like i:j, got '" + item + "'");
    try {
      std::uint32_t i = static_cast<std::uint32_t>(std::stoul(item.substr(0, colon)));
      std::uint32_t j = static_cast<std::uint32_t>(std::stoul(item.substr(colon + 1)));
      if (i >= k || j >= k) throw InvalidArgument("flip pair " + item + " outside 0.." + std::to_string(k - 1));
      pairs.emplace_back(i, j);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad flip pair '" + item + "'");
    }
  }
  return Flip(k, pairs);
}

struct FlipInputs {
  std::vector<std::uint32_t> partition;
  std::optional<std::size_t> k;
  std::string flip;
};

void AddFlipOptions(CLI::App* app, FlipInputs& in) {
  app->add_option("--partition", in.partition, "part of each vertex, comma separated (overrides the file)")
      ->delimiter(',');
  app->add_option("--k", in.k, "number of parts");
  app->add_option("--flip", in.flip, "flip pairs i:j, comma separated (overrides the file)");
}

std::pair<Partition, Flip> ResolveFlip(const GraphDocument& doc, const FlipInputs& in) {
  std::optional<Partition> p = doc.partition;
  if (!in.partition.empty()) {
    std::uint32_t top = *std::max_element(in.partition.begin(), in.partition.end());
    p = Partition(in.k.value_or(top + 1), in.partition);
  } else if (p && in.k && *in.k != p->k()) {
    p = Partition(*in.k, p->parts());
  }
  if (!p) throw InvalidArgument("no partition: add one to the graph file or pass --partition");
  if (p->size() != doc.graph.order()) throw InvalidArgument("partition length does not match the graph order");
  std::optional<Flip> f = doc.flip;
  if (!in.flip.empty()) f = ParseFlip(in.flip, p->k());
  if (!f) throw InvalidArgument("no flip: add one to the graph file or pass --flip");
  if (f->k() != p->k()) throw InvalidArgument("flip and partition disagree on k");
  return {*p, *f};
}

struct FormulaInputs {
  std::string text;
  std::string file;
};

void AddFormulaOptions(CLI::App* app, FormulaInputs& in) {
  auto* t = app->add_option("--formula", in.text, "formula text");
  auto* f = app->add_option("--formula-file", in.file, "file holding the formula");
  t->excludes(f);
}

std::string FormulaText(Session& s, const FormulaInputs& in) {
  if (!in.file.empty()) return s.ReadFile(in.file);
  if (in.text.empty()) throw InvalidArgument("pass --formula or --formula-file");
  s.NoteText("formula", in.text);
  return in.text;
}

struct PhiFlags {
  std::string v_guard = "complement";
  std::string unique = "both";
  PhiOptions Options() const {
    return {v_guard == "literal" ? VGuard::kLiteral : VGuard::kComplement,
            unique == "witness" ? UniqueGuard::kWitnessOnly : UniqueGuard::kBoth};
  }
};

void AddPhiOptions(CLI::App* app, PhiFlags& f) {
  app->add_option("--v-guard", f.v_guard, "reading of x in V")->check(CLI::IsMember({"complement", "literal"}));
  app->add_option("--unique", f.unique, "scope of the guard in exists!")->check(CLI::IsMember({"both", "witness"}));
}

json WitnessJson(const PhiWitness& w) {
  json assignment;
  const auto& names = GadgetVariables();
  for (std::size_t i = 0; i < names.size(); ++i) assignment[names[i]] = w.tuple[i];
  return {{"assignment", assignment}, {"U", w.u_set.ToVector()}, {"V", w.v_set.ToVector()},
          {"phi1", w.phi1},           {"psi1", w.psi1},          {"phi2", w.phi2},
          {"psi2", w.psi2},           {"body", w.body}};
}

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string VertexList(const std::vector<Vertex>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checking and constructions around extension preservation for graphs", "prescheck"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session(args, out);
  app.add_flag("--json", session.json_mode, "print a certificate instead of plain output");
  app.set_version_flag("--version", std::string(PRESCHECK_VERSION));

  std::function<int()> handler;

  // construct
  std::string family;
  std::uint32_t family_n = 7;
  std::string format = "json";
  auto* construct = app.add_subcommand("construct", "emit a graph from one of the families");
  construct->add_option("family", family, "H, gadget, gadget-prefix or half-graph")
      ->required()
      ->check(CLI::IsMember({"H", "gadget", "gadget-prefix", "half-graph"}));
  construct->add_option("--n", family_n, "family parameter");
  construct->add_option("--format", format, "json or edges")->check(CLI::IsMember({"json", "edges"}));
  construct->callback([&] {
    handler = [&] {
      NamedGraph g = family == "H"               ? BuildH(family_n)
                     : family == "gadget"        ? BuildGadget()
                     : family == "gadget-prefix" ? BuildGadgetPrefix()
                                                 : BuildHalfGraph(family_n);
      GraphDocument doc{g.graph, g.names, std::nullopt, std::nullopt};
      std::string plain = format == "edges" ? ToEdgeList(g.graph) : Dump(ToJson(doc));
      json w = {{"family", family}, {"graph", ToJson(doc)}};
      if (family == "H" || family == "half-graph") w["n"] = family_n;
      return session.Finish(std::nullopt, w, plain, kExitOk);
    };
  });

  // check-phi
  std::string graph_path;
  PhiFlags phi_flags;
  auto* check_phi = app.add_subcommand("check-phi", "decide whether the graph models the sentence phi");
  check_phi->add_option("graph", graph_path, "graph file")->required();
  AddPhiOptions(check_phi, phi_flags);
  check_phi->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      PhiResult r = CheckPhi(doc.graph, phi_flags.Options());
      json copies = json::array();
      for (const auto& t : r.tuples) copies.push_back(WitnessJson(t));
      json w = {{"holds", r.holds}, {"copies", copies}, {"witness", nullptr}, {"chains", nullptr}};
      std::string plain = "phi holds: " + Bool(r.holds) + "\ngadget copies: " + std::to_string(r.tuples.size()) + "\n";
      if (r.witness) {
        w["witness"] = WitnessJson(*r.witness);
        ChainCertificate c = BuildChains(doc.graph, *r.witness);
        w["chains"] = {{"alpha", c.alpha},
                       {"beta", c.beta},
                       {"alpha_complete", c.alpha_complete},
                       {"beta_complete", c.beta_complete}};
        plain += "witness: " + VertexList(r.witness->tuple) + "\nU: " + VertexList(r.witness->u_set.ToVector()) +
                 "\nV: " + VertexList(r.witness->v_set.ToVector()) + "\n";
      }
      return session.Finish(r.holds, w, plain, r.holds ? kExitOk : kExitRefuted);
    };
  });

  // minimal-model
  bool full = false;
  unsigned threads = 1;
  auto* minimal = app.add_subcommand("minimal-model", "decide whether the graph is a minimal induced model of phi");
  minimal->add_option("graph", graph_path, "graph file")->required();
  minimal->add_flag("--full", full, "enumerate every proper induced subgraph holding a gadget copy");
  minimal->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  AddPhiOptions(minimal, phi_flags);
  minimal->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      const std::string mode = full ? "full" : "vertex-deletion";
      try {
        MinimalityReport r = CheckMinimal(doc.graph, full ? MinimalityMode::kFullEnumeration
                                                          : MinimalityMode::kVertexDeletion,
                                          threads, phi_flags.Options());
        json w = {{"model", true},          {"minimal", r.minimal}, {"mode", mode},
                  {"checked", r.checked},   {"pruned", r.pruned},   {"smaller_models", r.smaller_models}};
        std::string plain = "minimal: " + Bool(r.minimal) + "\nchecked: " + std::to_string(r.checked) +
                            "\npruned: " + std::to_string(r.pruned) + "\n";
        return session.Finish(r.minimal, w, plain, r.minimal ? kExitOk : kExitRefuted);
      } catch (const NotAModelError&) {
        json w = {{"model", false}, {"minimal", false}, {"mode", mode}};
        return session.Finish(false, w, "minimal: false\nthe graph does not model phi\n", kExitRefuted);
      }
    };
  });

  // embeddings
  std::string pattern_path, host_path;
  std::optional<std::size_t> limit;
  bool count_only = false;
  auto* embeddings = app.add_subcommand("embeddings", "list induced embeddings of a pattern into a host");
  embeddings->add_option("pattern", pattern_path, "pattern graph file")->required();
  embeddings->add_option("host", host_path, "host graph file")->required();
  embeddings->add_option("--limit", limit, "stop after this many");
  embeddings->add_flag("--count-only", count_only, "print only the number of embeddings");
  embeddings->callback([&] {
    handler = [&] {
      Graph p = session.LoadGraph(pattern_path).graph;
      Graph h = session.LoadGraph(host_path).graph;
      if (count_only) {
        std::uint64_t count = 0;
        ForEachEmbedding(p, h, [&](const Embedding&) { return !limit || ++count < *limit || (count = *limit, false); });
        if (!limit) count = CountEmbeddings(p, h);
        return session.Finish(std::nullopt, {{"count", count}}, std::to_string(count) + "\n", kExitOk);
      }
      json list = json::array();
      for (const auto& f : FindEmbeddings(p, h, limit)) {
        json pairs = json::array();
        for (std::size_t i = 0; i < f.size(); ++i) pairs.push_back({i, f[i]});
        list.push_back(pairs);
      }
      return session.Finish(std::nullopt, {{"count", list.size()}, {"embeddings", list}}, list.dump() + "\n",
                            kExitOk);
    };
  });

  // flip and flipsum
  FlipInputs flip_inputs;
  auto* flip = app.add_subcommand("flip", "complement edges between the parts listed in the flip");
  flip->add_option("graph", graph_path, "graph file")->required();
  AddFlipOptions(flip, flip_inputs);
  flip->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      auto [p, f] = ResolveFlip(doc, flip_inputs);
      GraphDocument res{ApplyFlip(doc.graph, p, f), doc.labels, p, f};
      return session.Finish(std::nullopt, {{"graph", ToJson(res)}}, Dump(ToJson(res)), kExitOk);
    };
  });
  auto* flipsum = app.add_subcommand("flipsum", "two copies of the graph joined along the flip");
  flipsum->add_option("graph", graph_path, "graph file")->required();
  AddFlipOptions(flipsum, flip_inputs);
  flipsum->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      auto [p, f] = ResolveFlip(doc, flip_inputs);
      std::vector<std::uint32_t> parts = p.parts();
      parts.insert(parts.end(), p.parts().begin(), p.parts().end());
      GraphDocument res{FlipSum(doc.graph, p, f), doc.labels, Partition(p.k(), parts), f};
      return session.Finish(std::nullopt, {{"graph", ToJson(res)}}, Dump(ToJson(res)), kExitOk);
    };
  });

  // translate
  FormulaInputs formula_inputs;
  std::uint32_t translate_k = 1;
  std::string translate_flip;
  bool literal = false;
  auto* translate = app.add_subcommand("translate", "rewrite E(x,y) through a k-flip");
  AddFormulaOptions(translate, formula_inputs);
  translate->add_option("--k", translate_k, "number of parts")->required();
  translate->add_option("--flip", translate_flip, "flip pairs i:j, comma separated");
  translate->add_flag("--literal", literal, "do not guard diagonal pairs against x = y");
  translate->callback([&] {
    handler = [&] {
      Formula f = ParseFormula(FormulaText(session, formula_inputs));
      Flip fl = ParseFlip(translate_flip, translate_k);
      Formula t =
          TranslateFlip(f, translate_k, fl, literal ? FlipTranslation::kLiteral : FlipTranslation::kLoopSafe);
      json w = {{"formula", ToString(f)},
                {"translated", ToString(t)},
                {"k", translate_k},
                {"flip", PairsJson(fl)},
                {"mode", literal ? "literal" : "loop-safe"}};
      return session.Finish(std::nullopt, w, ToString(t) + "\n", kExitOk);
    };
  });

  // eval
  bool expand = false, reference = false;
  std::vector<std::string> assign, set_values;
  std::string unique_scope = "both";
  auto* eval = app.add_subcommand("eval", "evaluate a formula on a graph");
  eval->add_option("graph", graph_path, "graph file")->required();
  AddFormulaOptions(eval, formula_inputs);
  AddFlipOptions(eval, flip_inputs);
  eval->add_flag("--expand", expand, "evaluate on the flipped graph with part predicates");
  eval->add_flag("--reference", reference, "use the plain recursive evaluator");
  eval->add_option("--assign", assign, "free variable values, name=vertex")->delimiter(',');
  eval->add_option("--set", set_values, "set parameter values, name=v:v:...")->delimiter(',');
  eval->add_option("--unique", unique_scope, "scope of the guard in exists!")
      ->check(CLI::IsMember({"both", "witness"}));
  eval->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      std::string text = FormulaText(session, formula_inputs);
      LabeledStructure s(doc.graph, doc.partition, doc.labels);
      if (expand) {
        auto [p, f] = ResolveFlip(doc, flip_inputs);
        s = FlipExpansion(doc.graph, p, f);
        s.constants = doc.labels;
      } else if (!flip_inputs.partition.empty()) {
        std::uint32_t top = *std::max_element(flip_inputs.partition.begin(), flip_inputs.partition.end());
        s.parts = Partition(flip_inputs.k.value_or(top + 1), flip_inputs.partition);
      }
      ParseOptions po;
      if (s.parts) po.max_part = static_cast<std::uint32_t>(s.parts->k());
      po.unique_guard = unique_scope == "witness" ? UniqueGuard::kWitnessOnly : UniqueGuard::kBoth;
      Formula f = ParseFormula(text, po);
      Assignment a;
      for (const auto& item : assign) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("assignments look like name=vertex");
        try {
          a.variables[item.substr(0, eq)] = static_cast<Vertex>(std::stoul(item.substr(eq + 1)));
        } catch (const std::logic_error&) {
          throw InvalidArgument("bad assignment '" + item + "'");
        }
      }
      for (const auto& item : set_values) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("set values look like name=v:v:...");
        VertexSet members(s.order());
        std::stringstream ss(item.substr(eq + 1));
        std::string v;
        while (std::getline(ss, v, ':')) {
          if (v.empty()) continue;
          Vertex x;
          try {
            x = static_cast<Vertex>(std::stoul(v));
          } catch (const std::logic_error&) {
            throw InvalidArgument("bad vertex '" + v + "' in --set");
          }
          if (x >= s.order()) throw InvalidArgument("vertex " + v + " out of range in --set");
          members.insert(x);
        }
        a.sets[item.substr(0, eq)] = members;
      }
      bool value = reference ? EvaluateReference(s, f, a) : Evaluate(s, f, a);
      json w = {{"formula", ToString(f)},
                {"value", value},
                {"quantifier_rank", QuantifierRank(f)},
                {"expanded", expand},
                {"assignment", a.variables}};
      return session.Finish(value, w, Bool(value) + "\n", value ? kExitOk : kExitRefuted);
    };
  });

  // cover
  std::uint32_t cover_q = 1, cover_d = 1, cover_n = 2;
  std::uint64_t headroom = 0;
  std::string oracle_name = "signature";
  auto* cover = app.add_subcommand("cover", "run the covering greedy over vertex types");
  cover->add_option("graph", graph_path, "graph file; its partition labels the vertices")->required();
  cover->add_option("--q", cover_q, "rounds for the exact oracle");
  cover->add_option("--d", cover_d, "neighbourhood radius");
  cover->add_option("--n", cover_n, "spread-out realisations asked for");
  cover->add_option("--oracle", oracle_name, "exact or signature")->check(CLI::IsMember({"exact", "signature"}));
  cover->add_option("--headroom", headroom, "added to the observed type count");
  cover->callback([&] {
    handler = [&] {
      GraphDocument doc = session.LoadGraph(graph_path);
      LabeledStructure s(doc.graph, doc.partition);
      TypeOracle o{oracle_name == "exact" ? OracleKind::kExact : OracleKind::kSignature, cover_q, cover_d, headroom};
      CoverCertificate c = BottleneckCover(s, o, cover_n);
      std::vector<std::string> problems = ValidateCover(s, c);
      json cert = c.ToJson();
      cert["oracle"] = oracle_name;
      cert["q"] = cover_q;
      cert["problems"] = problems;
      bool ok = problems.empty() && c.WithinBounds();
      return session.Finish(ok, {{"certificate", cert}}, Dump(cert), ok ? kExitOk : kExitRefuted);
    };
  });

  // constants
  std::uint64_t rho = 0, sum_s = 0, gamma = 0, ell = 0, p_types = 0;
  auto* constants = app.add_subcommand("constants", "the constant schedule of the main theorem");
  constants->add_option("--rho", rho, "largest locality radius");
  constants->add_option("--s", sum_s, "sum of widths");
  constants->add_option("--gamma", gamma, "largest quantifier rank");
  constants->add_option("--ell", ell, "number of disjuncts");
  constants->add_option("--p", p_types, "number of types");
  constants->callback([&] {
    handler = [&] {
      ConstantSchedule c = TheoremConstants(rho, sum_s, gamma, ell, p_types);
      json w = {{"rho", c.rho}, {"s", c.s}, {"gamma", c.gamma}, {"ell", c.ell}, {"p", c.p},
                {"q", c.q},     {"d", c.d}, {"n", c.n},         {"m", c.m},     {"r", c.r}};
      std::string plain = "q=" + std::to_string(c.q) + " d=" + std::to_string(c.d) + " n=" + std::to_string(c.n) +
                          " m=" + std::to_string(c.m) + " r=" + std::to_string(c.r) + "\n";
      return session.Finish(std::nullopt, w, plain, kExitOk);
    };
  });

  // flipflat
  ProbeOptions probe;
  std::optional<std::size_t> want_m;
  std::uint64_t seed_value = 0;
  auto* flipflat = app.add_subcommand("flipflat", "search flips for a large r-independent set");
  flipflat->add_option("graph", graph_path, "graph file")->required();
  flipflat->add_option("--r", probe.r, "independence radius");
  flipflat->add_option("--k", probe.k, "number of parts");
  flipflat->add_option("--budget", probe.budget, "random restarts when the search is not exhaustive");
  flipflat->add_option("--seed", seed_value, "random seed")->required();
  flipflat->add_option("--threads", probe.threads, "worker threads")->check(CLI::PositiveNumber);
  flipflat->add_option("--m", want_m, "required set size");
  flipflat->callback([&] {
    handler = [&] {
      session.seed = seed_value;
      probe.seed = seed_value;
      GraphDocument doc = session.LoadGraph(graph_path);
      auto w = FlipflatProbe(doc.graph, probe);
      if (!w) {
        json none = {{"found", false}};
        return session.Finish(want_m ? std::optional<bool>(false) : std::nullopt, none, "no witness found\n",
                              want_m ? kExitRefuted : kExitOk);
      }
      bool verified = VerifyFlatWitness(doc.graph, w->partition, w->flip, w->set, probe.r, want_m.value_or(0));
      json out = {{"found", true},
                  {"k", w->partition.k()},
                  {"partition", w->partition.parts()},
                  {"flip", PairsJson(w->flip)},
                  {"set", w->set.ToVector()},
                  {"size", w->set.count()},
                  {"r", probe.r},
                  {"exhaustive", w->exhaustive},
                  {"evaluated", w->evaluated},
                  {"verified", verified}};
      std::string plain = "size: " + std::to_string(w->set.count()) + "\nset: " + VertexList(w->set.ToVector()) +
                          "\npartition: " + VertexList(w->partition.parts()) + "\nflip: " + PairsJson(w->flip).dump() +
                          "\nexhaustive: " + Bool(w->exhaustive) + "\n";
      std::optional<bool> verdict = want_m ? std::optional<bool>(verified) : std::nullopt;
      return session.Finish(verdict, out, plain, verified ? kExitOk : kExitRefuted);
    };
  });

  // preservation-fuzz
  FuzzOptions fuzz;
  std::string bases = "hn";
  auto* fuzz_cmd = app.add_subcommand("preservation-fuzz", "random extensions G <= H with G |= phi, H |/= phi");
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of extension pairs");
  fuzz_cmd->add_option("--seed", seed_value, "random seed")->required();
  fuzz_cmd->add_option("--bases", bases, "hn or mixed")->check(CLI::IsMember({"hn", "mixed"}));
  fuzz_cmd->add_option("--sizes", fuzz.sizes, "orders n of the H_n bases")->delimiter(',');
  fuzz_cmd->add_option("--max-extra", fuzz.max_extra, "most vertices added per extension")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", fuzz.threads, "worker threads")->check(CLI::PositiveNumber);
  AddPhiOptions(fuzz_cmd, phi_flags);
  fuzz_cmd->callback([&] {
    handler = [&] {
      session.seed = seed_value;
      fuzz.seed = seed_value;
      fuzz.bases = bases == "mixed" ? FuzzBases::kMixed : FuzzBases::kHn;
      fuzz.phi = phi_flags.Options();
      FuzzReport r = PreservationFuzz(fuzz);
      bool clean = r.violations.empty();
      std::string plain = "trials: " + std::to_string(r.trials) + "\nbase models: " + std::to_string(r.base_models) +
                          "\nhost models: " + std::to_string(r.host_models) +
                          "\nviolations: " + std::to_string(r.violations.size()) + "\n";
      return session.Finish(clean, r.ToJson(fuzz), plain, clean ? kExitOk : kExitRefuted);
    };
  });

  // sc
  auto* sc = app.add_subcommand("sc", "SC-decomposition trees");
  sc->require_subcommand(1);
  std::uint32_t leaves = 4, height = 3;
  auto* sc_random = sc->add_subcommand("random", "emit a random tree");
  sc_random->add_option("--leaves", leaves, "number of leaves")->check(CLI::PositiveNumber);
  sc_random->add_option("--height", height, "levels, a single leaf being 1")->check(CLI::PositiveNumber);
  sc_random->add_option("--seed", seed_value, "random seed")->required();
  sc_random->callback([&] {
    handler = [&] {
      session.seed = seed_value;
      std::mt19937_64 rng(seed_value);
      SCTree t = RandomSCTree(rng, leaves, height);
      return session.Finish(std::nullopt, {{"tree", ToJson(t)}}, Dump(ToJson(t)), kExitOk);
    };
  });
  std::string tree_path;
  std::optional<std::uint32_t> sc_k;
  auto* sc_eval = sc->add_subcommand("eval", "evaluate a tree to its graph");
  sc_eval->add_option("tree", tree_path, "tree file")->required();
  sc_eval->add_option("--k", sc_k, "also decide membership in SC(k)");
  sc_eval->callback([&] {
    handler = [&] {
      SCTree t = SCTreeFromJson(session.LoadJson(tree_path));
      GraphDocument doc{EvalSCTree(t), {}, std::nullopt, std::nullopt};
      json w = {{"graph", ToJson(doc)}, {"height", t.Height()}, {"leaves", t.LeafCount()}};
      std::optional<bool> verdict;
      if (sc_k) {
        verdict = InSC(t, *sc_k);
        w["in_sc"] = *verdict;
      }
      return session.Finish(verdict, w, Dump(ToJson(doc)), verdict.value_or(true) ? kExitOk : kExitRefuted);
    };
  });
  std::vector<std::uint32_t> route;
  auto* sc_double = sc->add_subcommand("double", "double a tree along a root path and compare with the flip-sum");
  sc_double->add_option("tree", tree_path, "tree file")->required();
  sc_double->add_option("--route", route, "child positions from the root, comma separated")->delimiter(',');
  sc_double->callback([&] {
    handler = [&] {
      SCTree t = SCTreeFromJson(session.LoadJson(tree_path));
      std::vector<int> path{t.root()};
      for (std::uint32_t step : route) {
        const auto& kids = t.node(path.back()).children;
        if (step >= kids.size()) throw InvalidArgument("route leaves the tree");
        path.push_back(kids[step]);
      }
      DoubledTree d = DoubleSCTree(t, path);
      Graph doubled = EvalSCTree(d.tree);
      Graph sum = FlipSum(EvalSCTree(t), d.partition, d.flip);
      bool equal = doubled == sum;
      bool same = equal || (doubled.order() <= kDefaultIsomorphismBound && IsIsomorphic(doubled, sum));
      json w = {{"tree", ToJson(d.tree)},
                {"k", d.partition.k()},
                {"partition", d.partition.parts()},
                {"flip", PairsJson(d.flip)},
                {"equal", equal},
                {"isomorphic", same},
                {"height", d.tree.Height()}};
      return session.Finish(same, w, "doubled tree gives the flip-sum: " + Bool(same) + "\n",
                            same ? kExitOk : kExitRefuted);
    };
  });

  // cw
  auto* cw = app.add_subcommand("cw", "clique-width expressions");
  cw->require_subcommand(1);
  std::uint32_t cw_n = 7;
  auto* cw_hn = cw->add_subcommand("hn", "emit the 4-colour expression for H_n and check it");
  cw_hn->add_option("--n", cw_n, "H_n parameter");
  cw_hn->callback([&] {
    handler = [&] {
      CliqueExpression e = HnCliqueExpression(cw_n);
      bool iso = IsIsomorphic(EvalCliqueExpression(e), BuildH(cw_n).graph);
      bool ok = iso && e.Width() <= 4;
      json w = {{"expression", ToJson(e)},
                {"width", e.Width()},
                {"linear", e.IsLinear()},
                {"isomorphic", iso},
                {"n", cw_n}};
      return session.Finish(ok, w, Dump(ToJson(e)), ok ? kExitOk : kExitRefuted);
    };
  });
  std::string expr_path;
  auto* cw_eval = cw->add_subcommand("eval", "evaluate an expression to its graph");
  cw_eval->add_option("expression", expr_path, "expression file")->required();
  cw_eval->callback([&] {
    handler = [&] {
      CliqueExpression e = CliqueExpressionFromJson(session.LoadJson(expr_path));
      GraphDocument doc{EvalCliqueExpression(e), {}, std::nullopt, std::nullopt};
      json w = {{"graph", ToJson(doc)}, {"width", e.Width()}, {"linear", e.IsLinear()}};
      return session.Finish(std::nullopt, w, Dump(ToJson(doc)), kExitOk);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  try {
    return handler ? handler() : kExitUsage;
  } catch (const ParseError& e) {
    err << "prescheck: formula: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "prescheck: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "prescheck: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace prescheck
