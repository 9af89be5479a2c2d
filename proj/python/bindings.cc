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


#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <nlohmann/json.hpp>

#include "prescheck/cli.h"
#include "prescheck/constructions.h"
#include "prescheck/embedding.h"
#include "prescheck/error.h"
#include "prescheck/evaluate.h"
#include "prescheck/flip_theorem.h"
#include "prescheck/graph_io.h"
#include "prescheck/parser.h"
#include "prescheck/phi.h"
#include "prescheck/transforms.h"

namespace py = pybind11;
using nlohmann::json;

namespace prescheck {
namespace {

// Python objects cross the boundary as JSON text.
py::object ToPy(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json FromPy(const py::handle& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

GraphDocument Doc(const py::handle& o) { return GraphDocumentFromJson(FromPy(o)); }
py::object DocToPy(const Graph& g) { return ToPy(ToJson(g)); }
py::object DocToPy(const NamedGraph& g) {
  return ToPy(ToJson(GraphDocument{g.graph, g.names, std::nullopt, std::nullopt}));
}

PhiOptions Options(const std::string& v_guard, const std::string& unique) {
  if (v_guard != "complement" && v_guard != "literal") throw InvalidArgument("v_guard is complement or literal");
  if (unique != "both" && unique != "witness") throw InvalidArgument("unique is both or witness");
  return {v_guard == "literal" ? VGuard::kLiteral : VGuard::kComplement,
          unique == "witness" ? UniqueGuard::kWitnessOnly : UniqueGuard::kBoth};
}

Flip FlipFrom(std::size_t k, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  return Flip(k, pairs);
}

json WitnessJson(const PhiWitness& w) {
  return {{"tuple", w.tuple}, {"U", w.u_set.ToVector()}, {"V", w.v_set.ToVector()}, {"body", w.body}};
}

}  // namespace
}  // namespace prescheck

PYBIND11_MODULE(_prescheck, m) {
  using namespace prescheck;
  m.doc() = "Graph constructions, the sentence phi and flip machinery";
  m.attr("__version__") = PRESCHECK_VERSION;

  // Translators run newest first, so the base class goes in before its subclasses.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<NotAModelError>(m, "NotAModelError", base);
  py::register_exception<EvaluationError>(m, "EvaluationError", base);

  m.def("build_h", [](std::uint32_t n) { return DocToPy(BuildH(n)); }, py::arg("n"));
  m.def("build_gadget", [] { return DocToPy(BuildGadget()); });
  m.def("build_gadget_prefix", [] { return DocToPy(BuildGadgetPrefix()); });
  m.def("build_half_graph", [](std::uint32_t n) { return DocToPy(BuildHalfGraph(n)); }, py::arg("n"));

  m.def(
      "check_phi",
      [](py::object g, const std::string& v_guard, const std::string& unique) {
        PhiResult r = CheckPhi(Doc(g).graph, Options(v_guard, unique));
        json out = {{"holds", r.holds}, {"copies", r.tuples.size()}, {"witness", nullptr}};
        if (r.witness) out["witness"] = WitnessJson(*r.witness);
        return ToPy(out);
      },
      py::arg("graph"), py::arg("v_guard") = "complement", py::arg("unique") = "both");
  m.def(
      "check_minimal",
      [](py::object g, bool full, unsigned threads) {
        Graph graph = Doc(g).graph;
        MinimalityReport r;
        {
          py::gil_scoped_release release;
          r = CheckMinimal(graph, full ? MinimalityMode::kFullEnumeration : MinimalityMode::kVertexDeletion,
                           threads);
        }
        return ToPy({{"minimal", r.minimal}, {"checked", r.checked}, {"pruned", r.pruned},
                     {"smaller_models", r.smaller_models}});
      },
      py::arg("graph"), py::arg("full") = false, py::arg("threads") = 1);
  m.def("phi_source", [] { return PhiSource(); });

  m.def(
      "find_embeddings",
      [](py::object p, py::object h, std::optional<std::size_t> limit) {
        return FindEmbeddings(Doc(p).graph, Doc(h).graph, limit);
      },
      py::arg("pattern"), py::arg("host"), py::arg("limit") = py::none());
  m.def(
      "count_embeddings", [](py::object p, py::object h) { return CountEmbeddings(Doc(p).graph, Doc(h).graph); },
      py::arg("pattern"), py::arg("host"));

  m.def(
      "apply_flip",
      [](py::object g, std::vector<std::uint32_t> parts, std::size_t k,
         std::vector<std::pair<std::uint32_t, std::uint32_t>> flip) {
        return DocToPy(ApplyFlip(Doc(g).graph, Partition(k, parts), FlipFrom(k, flip)));
      },
      py::arg("graph"), py::arg("partition"), py::arg("k"), py::arg("flip"));
  m.def(
      "flip_sum",
      [](py::object g, std::vector<std::uint32_t> parts, std::size_t k,
         std::vector<std::pair<std::uint32_t, std::uint32_t>> flip) {
        return DocToPy(FlipSum(Doc(g).graph, Partition(k, parts), FlipFrom(k, flip)));
      },
      py::arg("graph"), py::arg("partition"), py::arg("k"), py::arg("flip"));
  m.def(
      "translate_flip",
      [](const std::string& formula, std::size_t k, std::vector<std::pair<std::uint32_t, std::uint32_t>> flip,
         bool literal) {
        return ToString(TranslateFlip(ParseFormula(formula), k, FlipFrom(k, flip),
                                      literal ? FlipTranslation::kLiteral : FlipTranslation::kLoopSafe));
      },
      py::arg("formula"), py::arg("k"), py::arg("flip"), py::arg("literal") = false);
  m.def(
      "evaluate",
      [](py::object g, const std::string& formula, std::map<std::string, Vertex> variables) {
        GraphDocument doc = Doc(g);
        LabeledStructure s(doc.graph, doc.partition, doc.labels);
        ParseOptions po;
        if (s.parts) po.max_part = static_cast<std::uint32_t>(s.parts->k());
        Assignment a;
        a.variables = std::move(variables);
        return Evaluate(s, ParseFormula(formula, po), a);
      },
      py::arg("graph"), py::arg("formula"), py::arg("assignment") = std::map<std::string, Vertex>{});

  m.def(
      "theorem_constants",
      [](std::uint64_t rho, std::uint64_t s, std::uint64_t gamma, std::uint64_t ell, std::uint64_t p) {
        ConstantSchedule c = TheoremConstants(rho, s, gamma, ell, p);
        return ToPy({{"q", c.q}, {"d", c.d}, {"n", c.n}, {"m", c.m}, {"r", c.r}});
      },
      py::arg("rho"), py::arg("s"), py::arg("gamma"), py::arg("ell"), py::arg("p"));
  m.def(
      "bottleneck_cover",
      [](py::object g, std::uint32_t d, std::uint32_t n, const std::string& oracle, std::uint32_t q) {
        GraphDocument doc = Doc(g);
        LabeledStructure s(doc.graph, doc.partition);
        TypeOracle o{oracle == "exact" ? OracleKind::kExact : OracleKind::kSignature, q, d, 0};
        CoverCertificate c = BottleneckCover(s, o, n);
        json out = c.ToJson();
        out["problems"] = ValidateCover(s, c);
        return ToPy(out);
      },
      py::arg("graph"), py::arg("d"), py::arg("n"), py::arg("oracle") = "signature", py::arg("q") = 1);
  m.def(
      "flipflat_probe",
      [](py::object g, std::uint32_t r, std::size_t k, std::uint64_t budget, std::uint64_t seed) {
        ProbeOptions o;
        o.r = r;
        o.k = k;
        o.budget = budget;
        o.seed = seed;
        auto w = FlipflatProbe(Doc(g).graph, o);
        if (!w) return py::object(py::none());
        return ToPy({{"partition", w->partition.parts()},
                     {"k", w->partition.k()},
                     {"flip", w->flip.Pairs()},
                     {"set", w->set.ToVector()},
                     {"exhaustive", w->exhaustive}});
      },
      py::arg("graph"), py::arg("r") = 1, py::arg("k") = 2, py::arg("budget") = 100, py::arg("seed"));
  m.def(
      "preservation_fuzz",
      [](std::uint64_t trials, std::uint64_t seed, const std::string& bases, unsigned threads) {
        FuzzOptions o;
        o.trials = trials;
        o.seed = seed;
        o.bases = bases == "mixed" ? FuzzBases::kMixed : FuzzBases::kHn;
        o.threads = threads;
        FuzzReport r;
        {
          py::gil_scoped_release release;
          r = PreservationFuzz(o);
        }
        return ToPy(r.ToJson(o));
      },
      py::arg("trials"), py::arg("seed"), py::arg("bases") = "hn", py::arg("threads") = 1);

  m.def("hn_clique_expression", [](std::uint32_t n) { return ToPy(ToJson(HnCliqueExpression(n))); }, py::arg("n"));
  m.def(
      "eval_clique_expression",
      [](py::object e) { return DocToPy(EvalCliqueExpression(CliqueExpressionFromJson(FromPy(e)))); },
      py::arg("expression"));
  m.def("eval_sc_tree", [](py::object t) { return DocToPy(EvalSCTree(SCTreeFromJson(FromPy(t)))); },
        py::arg("tree"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = RunCli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
