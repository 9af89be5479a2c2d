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

#include "prescheck/phi.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "parallel.h"
#include "prescheck/constructions.h"
#include "prescheck/embedding.h"
#include "prescheck/error.h"
#include "prescheck/evaluate.h"
#include "prescheck/graph_io.h"

namespace prescheck {

const std::vector<std::string>& GadgetVariables() {
  static const std::vector<std::string> names = {"v1", "v2", "v3", "v4", "v5", "v6", "u1",
                                                 "u2", "u3", "u4", "u5", "u6", "a",  "b"};
  return names;
}

namespace {

std::string Macros(const PhiOptions& options) {
  const auto& names = GadgetVariables();
  const Graph gadget = BuildGadget().graph;
  std::ostringstream out;
  out << "# induced diagram of the gadget\nlet I :=";
  bool first = true;
  for (Vertex i = 0; i < 14; ++i) {
    for (Vertex j = i + 1; j < 14; ++j) {
      out << (first ? "\n  " : " and\n  ") << names[i] << " != " << names[j] << " and "
          << (gadget.adjacent(i, j) ? "" : "not ") << "E(" << names[i] << "," << names[j] << ")";
      first = false;
    }
  }
  out << ";\n";
  out << "let U(x) := E(x,v1) and x != v2;\n";
  if (options.v_guard == VGuard::kComplement) {
    out << "let V(x) := (not E(x,v1) or x = v2) and x != a and x != b;\n";
  } else {
    out << "let V(x) := not E(x,v1) and x != a and x != b;\n";
  }
  out << R"(let leqV(x,y) := forall z in U. (E(z,x) implies E(z,y));
let ltV(x,y) := leqV(x,y) and not leqV(y,x);
let chi1 := forall x in V. forall y in V. (leqV(x,y) or leqV(y,x));
let chi2 := forall x in U. (E(x,v6) implies x = u6);
let chi3 := forall x in V. forall y in V.
  (ltV(x,y) and E(x,y) implies exists! z in U. (E(y,z) and not E(x,z)));
let leqU(x,y) := forall z in V. (E(z,x) implies E(z,y));
let ltU(x,y) := leqU(x,y) and not leqU(y,x);
let xi1 := forall x in U. forall y in U. (leqU(x,y) or leqU(y,x));
let xi2 := forall x in V. (E(x,u1) implies x = v1);
let xi2s := forall x in V. E(x,u6);
let xi3 := forall x in U. forall y in U.
  (ltU(x,y) and not E(x,y) implies exists! z in V. (E(y,z) and not E(x,z)));
let phi1 := chi1 and chi2 and chi3;
let psi1 := xi1 and xi2 and xi2s and xi3;
let phi2 := forall x in V. (x != v1 implies exists y in V. (E(x,y) and ltV(x,y)));
let psi2 := forall x in U. (x != u6 implies exists y in U. (not E(x,y) and ltU(x,y)));
let body := phi1 and psi1 implies phi2 and psi2;
)";
  return out.str();
}

ParseOptions ParseOptionsFor(const PhiOptions& options) {
  ParseOptions p;
  p.unique_guard = options.unique_guard;
  return p;
}

struct CompiledPhi {
  CompiledFormula body, phi1, psi1, phi2, psi2, u, v;
  explicit CompiledPhi(const PhiOptions& o)
      : body(PhiBody(o)),
        phi1(PhiPart("phi1", o)),
        psi1(PhiPart("psi1", o)),
        phi2(PhiPart("phi2", o)),
        psi2(PhiPart("psi2", o)),
        u(PhiPart("U(x)", o)),
        v(PhiPart("V(x)", o)) {}
};

const CompiledPhi& Compiled(const PhiOptions& o) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<CompiledPhi>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(o.v_guard), static_cast<int>(o.unique_guard)}];
  if (!slot) slot = std::make_unique<CompiledPhi>(o);
  return *slot;
}

}  // namespace

std::string PhiSource(const PhiOptions& options) {
  std::string vars;
  for (const auto& n : GadgetVariables()) vars += (vars.empty() ? "" : ", ") + n;
  return Macros(options) + "exists " + vars + ". (I and body)\n";
}

Formula BuildPhi(const PhiOptions& options) { return ParseFormula(PhiSource(options), ParseOptionsFor(options)); }

Formula PhiBody(const PhiOptions& options) { return PhiPart("body", options); }

Formula PhiPart(const std::string& name, const PhiOptions& options) {
  return ParseFormula(Macros(options) + name, ParseOptionsFor(options));
}

PhiResult CheckPhi(const Graph& g, const PhiOptions& options) {
  const CompiledPhi& phi = Compiled(options);
  const Graph gadget = BuildGadget().graph;
  const auto& names = GadgetVariables();
  LabeledStructure s(g);
  PhiResult result;
  ForEachEmbedding(gadget, g, [&](const Embedding& e) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a.variables[names[i]] = e[i];
    PhiWitness w;
    w.tuple = e;
    w.phi1 = phi.phi1.Evaluate(s, a);
    w.psi1 = phi.psi1.Evaluate(s, a);
    w.phi2 = phi.phi2.Evaluate(s, a);
    w.psi2 = phi.psi2.Evaluate(s, a);
    w.body = phi.body.Evaluate(s, a);
    w.u_set = VertexSet(g.order());
    w.v_set = VertexSet(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
      a.variables["x"] = x;
      if (phi.u.Evaluate(s, a)) w.u_set.insert(x);
      if (phi.v.Evaluate(s, a)) w.v_set.insert(x);
    }
    if (w.body && !result.holds) {
      result.holds = true;
      result.witness = w;
    }
    result.tuples.push_back(std::move(w));
    return true;
  });
  return result;
}

MinimalityReport CheckMinimal(const Graph& g, MinimalityMode mode, unsigned threads, const PhiOptions& options) {
  if (!CheckPhi(g, options).holds) throw NotAModelError("the graph does not model phi");
  const std::size_t n = g.order();
  std::vector<VertexSet> candidates;
  MinimalityReport report;
  if (mode == MinimalityMode::kVertexDeletion) {
    for (Vertex v = 0; v < n; ++v) {
      VertexSet keep = VertexSet::Full(n);
      keep.erase(v);
      candidates.push_back(keep);
    }
  } else {
    // Any proper induced model contains an induced gadget copy, which is
    // also one in g; so only supersets of gadget images need checking.
    std::vector<VertexSet> images;
    ForEachEmbedding(BuildGadget().graph, g, [&](const Embedding& e) {
      VertexSet img(n);
      for (Vertex x : e) img.insert(x);
      if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(img);
      return true;
    });
    std::vector<VertexSet> seen;
    for (const VertexSet& img : images) {
      std::vector<Vertex> rest = (VertexSet::Full(n) - img).ToVector();
      if (rest.size() > 24) throw SizeLimitExceeded("too many vertices outside the gadget copy");
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest.size()); ++mask) {
        VertexSet s = img;
        for (std::size_t b = 0; b < rest.size(); ++b)
          if (mask >> b & 1) s.insert(rest[b]);
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
      }
    }
    candidates = std::move(seen);
    const std::uint64_t proper = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    report.pruned = proper - candidates.size();
  }
  std::vector<char> models(candidates.size(), 0);
  internal::ParallelFor(candidates.size(), threads, [&](std::size_t i) {
    models[i] = CheckPhi(Induce(g, candidates[i]).graph, options).holds;
  });
  report.checked = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (models[i]) report.smaller_models.push_back(candidates[i].ToVector());
  report.minimal = report.smaller_models.empty();
  return report;
}

ChainCertificate BuildChains(const Graph& g, const PhiWitness& w) {
  ChainCertificate c;
  const auto& t = w.tuple;
  const Vertex v1 = t[0], v6 = t[5], u1 = t[6], u6 = t[11];
  auto walk = [&](Vertex start, Vertex goal, const VertexSet& side, const VertexSet& other, bool adjacent) {
    std::vector<Vertex> chain{start};
    VertexSet visited(g.order());
    visited.insert(start);
    Vertex x = start;
    while (x != goal) {
      const VertexSet nx = g.neighbors(x) & other;
      std::optional<Vertex> step;
      side.ForEach([&](Vertex y) {
        if (step || visited.contains(y) || g.adjacent(x, y) != adjacent) return;
        const VertexSet ny = g.neighbors(y) & other;
        if (nx.IsSubsetOf(ny) && ny.count() == nx.count() + 1) step = y;
      });
      if (!step) break;
      visited.insert(*step);
      chain.push_back(*step);
      x = *step;
    }
    return chain;
  };
  c.alpha = walk(v6, v1, w.v_set, w.u_set, true);
  c.beta = walk(u1, u6, w.u_set, w.v_set, false);
  c.alpha_complete = c.alpha.back() == v1 && c.alpha.size() == w.v_set.count() &&
                     c.alpha.size() == w.u_set.count();
  c.beta_complete = c.beta.back() == u6 && c.beta.size() == w.u_set.count();
  return c;
}

nlohmann::json FuzzReport::ToJson(const FuzzOptions& options) const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations)
    v.push_back({{"trial", x.trial}, {"base", x.base}, {"host", prescheck::ToJson(x.host)}});
  return {{"trials", trials},
          {"seed", options.seed},
          {"sizes", options.sizes},
          {"max_extra", options.max_extra},
          {"bases", options.bases == FuzzBases::kHn ? "hn" : "mixed"},
          {"base_models", base_models},
          {"host_models", host_models},
          {"violations", v}};
}

FuzzReport PreservationFuzz(const FuzzOptions& options) {
  if (options.sizes.empty()) throw InvalidArgument("no base sizes given");
  struct Base {
    std::string name;
    Graph graph;
    bool models;
  };
  std::vector<Base> bases;
  for (std::uint32_t n : options.sizes) bases.push_back({"H" + std::to_string(n), BuildH(n).graph, false});
  if (options.bases == FuzzBases::kMixed) {
    bases.push_back({"gadget", BuildGadget().graph, false});
    Graph h7 = BuildH(7).graph;
    for (Vertex v : {3u, 10u}) {  // v4, u4
      VertexSet keep = VertexSet::Full(h7.order());
      keep.erase(v);
      bases.push_back({"H7-" + std::string(v == 3 ? "v4" : "u4"), Induce(h7, keep).graph, false});
    }
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < 3; ++i) {
      Graph r(12);
      for (Vertex x = 0; x < 12; ++x)
        for (Vertex y = x + 1; y < 12; ++y)
          if (rng() & 1) r.AddEdge(x, y);
      bases.push_back({"random" + std::to_string(i), r, false});
    }
  }
  for (auto& b : bases) b.models = CheckPhi(b.graph, options.phi).holds;

  struct Trial {
    bool base_models, host_models;
    Graph host;
  };
  std::vector<Trial> results(options.trials);
  const Rational densities[] = {{1, 4}, {1, 2}, {3, 4}};
  internal::ParallelFor(options.trials, options.threads, [&](std::size_t t) {
    const std::uint64_t s = internal::SplitMix64(options.seed ^ internal::SplitMix64(t));
    const Base& b = bases[t % bases.size()];
    const std::uint32_t extra = 1 + static_cast<std::uint32_t>(s % std::max(1u, options.max_extra));
    const Rational density = densities[(s >> 8) % 3];
    Extension e = RandomExtension(b.graph, extra, density, s);
    results[t] = {b.models, CheckPhi(e.host, options.phi).holds, std::move(e.host)};
  });
  FuzzReport report;
  report.trials = options.trials;
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Trial& r = results[t];
    report.base_models += r.base_models;
    report.host_models += r.host_models;
    if (r.base_models && !r.host_models)
      report.violations.push_back({t, bases[t % bases.size()].name, r.host});
  }
  return report;
}

}  // namespace prescheck
